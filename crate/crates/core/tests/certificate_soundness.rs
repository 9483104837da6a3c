//! The certified combination against exact pentagon densities on every
//! small clique-free graph.

use pentagon_core::certificate::finite_soundness;
use pentagon_core::report::render_text;
use pentagon_core::Exec;

#[test]
fn certified_combination_dominates_on_seven_vertices() {
    let r = finite_soundness(4..=12, 7, Exec::default()).unwrap();
    println!("{}", render_text(&r.to_json()));
    assert!(r.passed(), "{}", render_text(&r.to_json()));
}
