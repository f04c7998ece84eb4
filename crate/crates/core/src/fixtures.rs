//! The worked example quivers, ready-made.
//!
//! Every constructor here has a matching input file under `fixtures/` in
//! the crate root; `tests/fixture_files.rs` keeps the two in sync.

use crate::quiver::Quiver;

/// A named quiver.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub quiver: Quiver,
}

fn build(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Quiver {
    Quiver::new(vertices.iter().copied(), arrows.iter().copied()).expect("fixture quiver is valid")
}

/// 1 → 2 → ⋯ → n → 1.
pub fn cyclic(n: usize) -> Quiver {
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrows: Vec<(String, String, String)> = (1..=n)
        .map(|i| {
            let j = if i == n { 1 } else { i + 1 };
            (format!("a{i}"), i.to_string(), j.to_string())
        })
        .collect();
    Quiver::new(vertices, arrows).expect("cyclic quiver is valid")
}

/// One vertex with `r` loops; its path algebra is the free algebra on `r` letters.
pub fn loops(r: usize) -> Quiver {
    let names: Vec<String> = if r <= 3 {
        ["x", "y", "z"][..r].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=r).map(|i| format!("x{i}")).collect()
    };
    Quiver::new(["1"], names.into_iter().map(|n| (n, "1".to_string(), "1".to_string())))
        .expect("loop quiver is valid")
}

/// Two vertices with two arrows in each direction.
pub fn two_cycle_double() -> Quiver {
    build(
        &["1", "2"],
        &[("a", "1", "2"), ("b", "1", "2"), ("c", "2", "1"), ("d", "2", "1")],
    )
}

/// Two disjoint vertices, each with two loops.
pub fn two_double_loops() -> Quiver {
    build(
        &["1", "2"],
        &[("x", "1", "1"), ("y", "1", "1"), ("u", "2", "2"), ("v", "2", "2")],
    )
}

/// Loop `x` at 1, `a`: 1 → 2, `b`: 2 → 1. Level sizes are Fibonacci numbers.
pub fn fibonacci() -> Quiver {
    build(&["1", "2"], &[("x", "1", "1"), ("a", "1", "2"), ("b", "2", "1")])
}

/// `m` loops at 1, one arrow each way between 1 and 2.
pub fn fibonacci_m(m: usize) -> Quiver {
    let mut arrows: Vec<(String, String, String)> = (1..=m)
        .map(|k| {
            let name = if m == 1 { "x".to_string() } else { format!("x{k}") };
            (name, "1".into(), "1".into())
        })
        .collect();
    arrows.push(("a".into(), "1".into(), "2".into()));
    arrows.push(("b".into(), "2".into(), "1".into()));
    Quiver::new(["1", "2"], arrows).expect("quiver is valid")
}

/// Loop `x` at 1 with a sink attached: `w`: 1 → 2.
pub fn loop_with_sink() -> Quiver {
    build(&["1", "2"], &[("x", "1", "1"), ("w", "1", "2")])
}

/// Loop `x` at 1 with a source attached: `w`: 2 → 1.
pub fn loop_with_source() -> Quiver {
    build(&["1", "2"], &[("x", "1", "1"), ("w", "2", "1")])
}

/// Loops `x` at 1 and `y` at 2 joined by `w`: 2 → 1.
pub fn compact_plus_scalar() -> Quiver {
    build(&["1", "2"], &[("x", "1", "1"), ("w", "2", "1"), ("y", "2", "2")])
}

/// Vertices 0..=r: a loop at 0, a chain 0 → 1 → ⋯ → r, and an arrow back
/// from every i ≥ 1 to 0.
pub fn multinacci(r: usize) -> Quiver {
    let vertices: Vec<String> = (0..=r).map(|i| i.to_string()).collect();
    let mut arrows = vec![("x".to_string(), "0".to_string(), "0".to_string())];
    for i in 1..=r {
        arrows.push((format!("f{i}"), (i - 1).to_string(), i.to_string()));
        arrows.push((format!("g{i}"), i.to_string(), "0".to_string()));
    }
    Quiver::new(vertices, arrows).expect("quiver is valid")
}

/// A source `s` feeding `a`: s → v, with a loop `x` at v.
pub fn source_into_loop() -> Quiver {
    build(&["s", "v"], &[("a", "s", "v"), ("x", "v", "v")])
}

/// Every named fixture.
pub fn all() -> Vec<Fixture> {
    let mut out = vec![
        Fixture { name: "fibonacci", quiver: fibonacci() },
        Fixture { name: "cyclic2", quiver: cyclic(2) },
        Fixture { name: "cyclic3", quiver: cyclic(3) },
        Fixture { name: "cyclic5", quiver: cyclic(5) },
        Fixture { name: "loop1", quiver: loops(1) },
        Fixture { name: "loops2", quiver: loops(2) },
        Fixture { name: "loops3", quiver: loops(3) },
        Fixture { name: "two-cycle-double", quiver: two_cycle_double() },
        Fixture { name: "two-double-loops", quiver: two_double_loops() },
        Fixture { name: "loop-with-sink", quiver: loop_with_sink() },
        Fixture { name: "loop-with-source", quiver: loop_with_source() },
        Fixture { name: "compact-plus-scalar", quiver: compact_plus_scalar() },
        Fixture { name: "source-into-loop", quiver: source_into_loop() },
        Fixture { name: "acyclic-line", quiver: build(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]) },
        Fixture { name: "empty", quiver: Quiver::empty() },
    ];
    for (m, name) in [(1, "fibonacci-m1"), (2, "fibonacci-m2"), (3, "fibonacci-m3")] {
        out.push(Fixture { name, quiver: fibonacci_m(m) });
    }
    for (r, name) in [(1, "multinacci1"), (2, "multinacci2")] {
        out.push(Fixture { name, quiver: multinacci(r) });
    }
    out
}
