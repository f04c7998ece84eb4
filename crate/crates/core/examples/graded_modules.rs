//! Graded representations: tails, qgr classes, splitting and transport
//! along a source deletion.

use qgr::fixtures;
use qgr::graded::{projective, simple, split_tail, transport, Deletion, GradedMap};
use qgr::tower::K0Group;

fn main() -> qgr::Result<()> {
    let q = fixtures::fibonacci();
    let p1 = projective(&q, 0, 0, (0, 5))?;
    let t = p1.tail_decomposition(1)?;
    println!("P_1 tail at 1: {:?} verified {}", t.multiplicities, t.verified);
    println!("class {}", p1.qgr_class(1)?);

    let e = simple(&q, 0, (0, 2))?;
    let c = e.qgr_class(1)?;
    println!("E_1 class {c}, zero: {}", K0Group::new(&q).is_zero(&c));

    let sum = p1.direct_sum(&projective(&q, 1, -2, (0, 5))?)?;
    let g = K0Group::new(&q);
    let (c3, c4) = (sum.qgr_class(3)?, sum.qgr_class(4)?);
    println!("P_1 + P_2(-2): {c3} and {c4} agree: {}", g.equal(&c3, &c4));

    // right multiplication by an arrow, split on the tail
    let a = q.arrow_index("a").unwrap();
    let f = GradedMap::right_multiplication(&q, a, (0, 5))?;
    let split = split_tail(&f, 1)?;
    println!("left inverse on the tail: {}", split.after(&f.truncate(1)?)?.is_identity());

    // deleting the source s: P_s restricted is P_v(-1)
    let sq = fixtures::source_into_loop();
    let ps = projective(&sq, 0, 0, (0, 4))?;
    let r = transport(&ps, Deletion::Source(0))?;
    println!("P_s after deleting s: dims {:?}", (0..=4).map(|d| r.dim_vector(d).to_vec()).collect::<Vec<_>>());
    Ok(())
}
