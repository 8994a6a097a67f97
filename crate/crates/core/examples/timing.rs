//! Times one extraction: `cargo run --release --example timing -- hqt 4 3`.

use std::time::Instant;

use charvar::invariants::{Engine, Kind};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let [kind, n, g] = args.as_slice() else {
        eprintln!("usage: timing <E|hqt|hxy|pp> <n> <g>");
        std::process::exit(2);
    };
    let kind: Kind = kind.parse().unwrap_or_else(|e| panic!("{e}"));
    let (n, g): (usize, u32) = (n.parse().expect("n"), g.parse().expect("g"));
    let start = Instant::now();
    let p = Engine::new().polynomial(kind, n, g).unwrap_or_else(|e| panic!("{e}"));
    println!("{kind} n={n} g={g}: {} terms in {:.2?}", p.len(), start.elapsed());
}
