//! Elements of S(Q): the embedding θ, products across levels, and equality
//! in the limit.

use qgr::fixtures;
use qgr::linalg::QMatrix;
use qgr::tower::Tower;

fn main() -> qgr::Result<()> {
    // loop x at 1, w: 2 -> 1, loop y at 2
    let q = fixtures::compact_plus_scalar();
    let t = Tower::new(&q);
    let a = QMatrix::from_ints(&[vec![1, 2], vec![3, 4]]);
    let x = t.element(1, vec![a, QMatrix::from_ints(&[vec![7]])])?;
    let up = t.theta(&x);
    println!("level 1 sizes {:?}, level 2 sizes {:?}", t.sizes(1), t.sizes(2));
    println!("theta(A, 7), block 1:");
    for row in up.block(0).to_dense() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("  {}", cells.join(" "));
    }
    println!("theta(A, 7) block 2: {}", up.block(1).get(0, 0));

    let y = t.unit(0);
    let prod = t.mul(&x, &y);
    println!("x * 1 = x in the limit: {}", t.limit_equal(&prod, &x));

    // the sink kills vertex 2 in the limit
    let s = fixtures::loop_with_sink();
    let ts = Tower::new(&s);
    let e2 = ts.block_idempotent(0, 1);
    println!("e_2 is zero in the limit: {}", ts.limit_is_zero(&e2));
    Ok(())
}
