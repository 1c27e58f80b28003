//! Solving a ∘ x = b over every operation of a multi-space, and systems of
//! chain equations with one unknown.

use multispace::constructions::{example_squares, latin_multispace};
use multispace::{solve_equation, solve_system, Equation, FiniteUniverse, Term};

fn main() -> multispace::Result<()> {
    let ms = latin_multispace(&FiniteUniverse::new(["1", "2", "3"])?, &example_squares())?;
    let u = ms.universe();
    for (a, b) in [("1", "2"), ("3", "3")] {
        let sols = solve_equation(&ms, u.lookup(a)?, u.lookup(b)?);
        let shown: Vec<String> = sols.iter().map(|s| format!("x = {} under {}", ms.name_of(s.x), s.op)).collect();
        println!("{a} ∘ x = {b}: {}", shown.join(", "));
    }

    let eqs = [
        Equation::new(vec![Term::Elem(u.lookup("2")?), Term::Hole], vec!["x1".into()], u.lookup("3")?)?,
        Equation::new(
            vec![Term::Hole, Term::Elem(u.lookup("1")?), Term::Hole],
            vec!["x2".into(), "x1".into()],
            u.lookup("1")?,
        )?,
    ];
    let sys = solve_system(&ms, &eqs)?;
    for (i, s) in sys.per_equation.iter().enumerate() {
        println!("equation {} alone: {}", i + 1, ms.render_set(s));
    }
    println!("common solutions: {}", ms.render_set(&sys.common));
    Ok(())
}
