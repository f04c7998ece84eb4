//! The dimension group: equality after level raising, the positivity
//! semi-decision, and the sufficient Morita check.

use qgr::fixtures;
use qgr::tower::{morita_equivalent_stationary, K0Group, Positivity};

fn main() -> qgr::Result<()> {
    let q = fixtures::fibonacci();
    let g = K0Group::new(&q);
    let x = g.class_i64(&[1, 0], 0)?;
    let y = g.class_i64(&[1, 1], 1)?;
    println!("{x} = {y}: {}", g.equal(&x, &y));
    println!("order unit {}", g.order_unit());

    for v in [[1, -1], [-1, 2], [-1, 0]] {
        let c = g.class_i64(&v, 0)?;
        match g.positive(&c, 6) {
            Positivity::Positive { steps } => println!("{c} positive after {steps} steps"),
            Positivity::NotPositiveYet(k) => println!("{c} undecided after {k} steps"),
        }
    }

    let verdict = morita_equivalent_stationary(&fixtures::two_cycle_double(), &fixtures::two_cycle_double())?;
    println!("two-cycle vs itself: {verdict:?}");
    let verdict = morita_equivalent_stationary(&fixtures::loop_with_sink(), &fixtures::loop_with_source())?;
    println!("loop+sink vs loop+source: {verdict:?}");
    Ok(())
}
