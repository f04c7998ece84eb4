//! Level sizes and edge multiplicities of the tower for the Fibonacci quiver.

use qgr::fixtures;
use qgr::tower::bratteli;

fn main() {
    let q = fixtures::fibonacci();
    let d = bratteli(&q, 6);
    print!("{d}");
    println!("{}", d.to_dot());
}
