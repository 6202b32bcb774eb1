// The two Grundy dominating sequence constructions on Sierpiński graphs.

use grundy::sequence::check_legal;
use grundy::sierpinski::{a_sequence, build_sierpinski, grundy_formula, l_sequence};

pub fn run_example() -> grundy::Result<()> {
    println!("A(3,2): {}", a_sequence(3, 2)?.to_string().replace('\n', " ").trim_end());
    println!("L(3,2): {}", l_sequence(3, 2)?.to_string().replace('\n', " ").trim_end());

    println!(" p n  vertices  formula  |A|  |L|  legal");
    for (p, n) in [(2, 5), (3, 3), (3, 4), (4, 3), (5, 3)] {
        let s = build_sierpinski(p, n)?;
        let a = a_sequence(p, n)?.to_vertex_sequence();
        let l = l_sequence(p, n)?.to_vertex_sequence();
        let ok = [&a, &l].iter().all(|seq| {
            let r = check_legal(&s.graph, seq).expect("labels are in range");
            r.legal && r.dominating
        });
        println!(
            "{p:>2} {n}  {:>8}  {:>7}  {:>3}  {:>3}  {ok}",
            s.graph.n(),
            grundy_formula(p as u64, n)?,
            a.len(),
            l.len()
        );
    }

    // labels only; far too large to build as a graph
    let big = a_sequence(3, 12)?;
    println!("A(3,12) has {} labels, formula {}", big.len(), grundy_formula(3, 12)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> grundy::Result<()> {
    run_example()
}
