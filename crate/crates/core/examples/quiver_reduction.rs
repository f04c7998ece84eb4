//! Sink and source deletion, the torsion split, Veronese quivers and DOT
//! output.

use qgr::fixtures;
use qgr::quiver::{core, sink_deletion_rounds, torsion_classification, veronese, DEFAULT_PATH_CAP};

fn main() -> qgr::Result<()> {
    let q = fixtures::source_into_loop();
    println!("core of source-into-loop:\n{}", core(&q));

    let s = fixtures::loop_with_sink();
    let t = torsion_classification(&s);
    println!("torsion split: {}", t.to_json_value(&s));
    println!("sink deletion rounds: {}", sink_deletion_rounds(&s));

    for q in [fixtures::two_cycle_double(), fixtures::two_double_loops()] {
        print!("{}", veronese(&q, 2, DEFAULT_PATH_CAP)?);
    }
    print!("{}", fixtures::fibonacci().to_dot());
    Ok(())
}
