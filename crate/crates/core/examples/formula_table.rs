//! Closed-form values of m_j(C3, C3, nK2) with their caveat flags.

use multiramsey::formula::{mrn_formula_c3c3, mrn_formula_c3c4};

fn main() -> multiramsey::Result<()> {
    let ns = 1..=9;
    print!("| j |");
    for n in ns.clone() {
        print!(" n={n} |");
    }
    println!();
    for j in 5..=12 {
        print!("| {j} |");
        for n in ns.clone() {
            let v = mrn_formula_c3c3(j, n)?;
            let flags: Vec<_> = v.caveats.iter().map(|c| c.code()).collect();
            if flags.is_empty() {
                print!(" {} |", v.value);
            } else {
                print!(" {} {} |", v.value, flags.join("+"));
            }
        }
        println!();
    }
    println!();
    for n in 2..=6 {
        println!("m_3(C3, C4, {n}K2) = {}", mrn_formula_c3c4(3, n)?.value);
    }
    Ok(())
}
