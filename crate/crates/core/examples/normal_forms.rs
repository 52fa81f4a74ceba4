//! Normal forms used by the `EG` and `EF` engines.

use ctl_fragments::fastcheck::{eg_and_form, eg_or_form, eg_prefix_form, ef_or_form, ef_prefix_form};
use ctl_fragments::syntax::parse_formula;

fn main() {
    let f = |s: &str| parse_formula(s).unwrap();
    let a = f("EG (p & EG (q & EG r)) & s");
    println!("{a}\n  => {}", eg_and_form(&a).unwrap().to_formula());
    let a = f("EG EG (p | EG (q | EG EG r)) | EG s");
    println!("{a}\n  => {}", eg_or_form(&a).unwrap().to_formula());
    let a = f("EF (p | EF (q | EF r))");
    println!("{a}\n  => {}", ef_or_form(&a).unwrap().to_formula());
    let a = f("!EG !EG !EG !EG p");
    println!("{a}\n  => {}", eg_prefix_form(&a).unwrap().to_formula());
    let a = f("EF !EF !EF !EF !EF p");
    println!("{a}\n  => {}", ef_prefix_form(&a).unwrap().to_formula());
}
