//! Paths counted three ways: enumeration, powers of the incidence matrix,
//! and the Hilbert series.

use qgr::fixtures;
use qgr::quiver::{enumerate_paths, path_counts};
use qgr::series::hilbert_series;

fn main() -> qgr::Result<()> {
    let q = fixtures::multinacci(2);
    let h = hilbert_series(&q).expand(8);
    for n in 0..=8u32 {
        let listed: Vec<usize> = enumerate_paths(&q, n)?.iter().map(Vec::len).collect();
        println!("n={n}: enumerated {listed:?}, C^n 1 = {:?}, series {:?}", path_counts(&q, n), h[n as usize]);
    }
    let first: Vec<String> = enumerate_paths(&q, 2)?[0].iter().map(|p| p.render(&q)).collect();
    println!("length-2 paths ending at 0: {}", first.join(" "));
    Ok(())
}
