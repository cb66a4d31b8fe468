//! Builds the parametric system for f(x) = 1/((1-x)(1-x^2)), eliminates the
//! parameter with two independent resultant algorithms and compares against
//! the literal quartic.

use algdiag::a348410;
use algdiag::burmann::{self, AlgebraicEquation};
use algdiag::exactpoly::{resultant_subresultant, Var};

fn main() -> algdiag::Result<()> {
    let f = a348410::generating_f();
    let sys = burmann::parametric_system(&f)?;
    println!("f  = {f}");
    println!("P1 = {}", sys.p1);
    println!("P2 = {}", sys.p2);

    let raw = burmann::raw_eliminant(&sys)?;
    let prs = resultant_subresultant(&sys.p1, &sys.p2, Var::Y)?
        .into_bipoly()
        .expect("two variables remain");
    assert_eq!(
        raw,
        prs.reorder(raw.vars())?,
        "Sylvester and PRS resultants disagree"
    );
    let (gamma, _) = raw.content_and_primitive()?;
    println!("Res_y(P1, P2) = {raw}");
    println!("discarded content: {gamma}");

    let eq = burmann::eliminate(&sys)?;
    println!("P(t, A) = {eq}");
    println!(
        "deg_A = {}, deg_t = {}, squarefree = {}",
        eq.deg_a(),
        eq.deg_t(),
        eq.is_squarefree()
    );

    let literal = AlgebraicEquation::new(a348410::algebraic_poly())?;
    assert_eq!(eq, literal);
    println!(
        "[A^4]P = {}, [A^3]P = {}",
        eq.coeff_of_a(4),
        eq.coeff_of_a(3)
    );
    println!("matches the literal quartic");
    Ok(())
}
