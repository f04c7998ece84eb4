//! Monomials p*q in the Leavitt path algebra, the degree-zero
//! anti-isomorphism with S(Q), and the elements t₊, t₋.

use qgr::fixtures;
use qgr::leavitt::{strongly_graded_certificate, ArrowSection, LeavittAlgebra};
use qgr::Path;

fn main() -> qgr::Result<()> {
    let q = fixtures::fibonacci();
    let l = LeavittAlgebra::new(&q)?;

    let a = Path::from_names(&q, "1", &["a"])?;
    let ba = Path::from_names(&q, "1", &["a", "b"])?;
    let x = Path::from_names(&q, "1", &["x"])?;
    let m = l.monomial(&ba, &x)?.element;
    println!("(ba)*x = {}", l.render(&m)?);
    let ai = q.arrow_index("a").unwrap();
    let (arrow, ghost) = (l.arrow_element(ai)?, l.ghost(ai)?);
    println!("a a* = {}", l.render(&l.multiply(&arrow, &ghost)?)?);
    println!("a* a = {}", l.render(&l.multiply(&ghost, &arrow)?)?);
    let (xe, ae) = (l.arrow_element(0)?, l.ghost(ai)?);
    println!("x a* = {}", l.render(&l.multiply(&xe, &ae)?)?);
    let not_composable = l.monomial(&a, &x)?;
    println!("a*x: {}", not_composable.mismatch.unwrap_or_default());

    for n in 0..=2 {
        println!("{}", l.verify_phi(n)?);
    }

    let s = ArrowSection::first_incoming(&q)?;
    println!("t+ = {}", l.render(&l.t_plus(&s)?)?);
    println!("t- = {}", l.render(&l.t_minus(&s)?)?);
    println!("section identities: {:?}", l.verify_section_identities(&s)?);
    println!("strongly graded certificate: {}", strongly_graded_certificate(&q)?.verified());

    match LeavittAlgebra::new(&fixtures::loop_with_sink()) {
        Err(e) => println!("with a sink: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
