// Legality checks, footprints, and greedy completion on a path.

use grundy::generators::make_path;
use grundy::sequence::{check_legal, extend_to_dominating, footprint_map};
use grundy::VertexSequence;

pub fn run_example() -> grundy::Result<()> {
    let p5 = make_path(5)?;
    for s in [vec![0, 1, 2, 4], vec![0, 2, 1], vec![1, 3]] {
        let s = VertexSequence::from(s);
        let r = check_legal(&p5, &s)?;
        println!(
            "({s}): legal={} first_illegal={:?} dominating={} footprints={:?}",
            r.legal, r.first_illegal, r.dominating, r.footprints
        );
    }

    let start = VertexSequence::from(vec![0]);
    let full = extend_to_dominating(&p5, &start)?;
    println!("greedy completion of ({start}) is ({full})");

    let f = footprint_map(&p5, &full)?;
    for v in &full {
        println!("  {v} footprints {:?}", f.footprinted_by(*v));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> grundy::Result<()> {
    run_example()
}
