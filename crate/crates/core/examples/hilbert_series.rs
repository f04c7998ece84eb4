//! Hilbert series of path algebras as reduced rational functions, checked
//! against path counts.

use qgr::fixtures;
use qgr::quiver::path_counts;
use qgr::series::{char_poly, hilbert_series};

fn main() {
    for m in 1..=3 {
        let q = fixtures::fibonacci_m(m);
        let h = hilbert_series(&q);
        println!("m = {m}");
        print!("{h}");
        println!("det(xI - C) = {}", char_poly(&q.incidence_matrix()).render("x"));
        let ok = h
            .expand(12)
            .iter()
            .enumerate()
            .all(|(n, row)| *row == path_counts(&q, n as u32));
        println!("coefficients match path counts to degree 12: {ok}");
    }
}
