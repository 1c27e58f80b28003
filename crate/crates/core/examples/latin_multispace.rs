//! Latin squares as operation tables: counting small squares, building a
//! multi-space from several of them and evaluating operation chains.

use multispace::constructions::{
    enumerate_latin_squares, example_squares, factorial_product, gen_latin_squares, latin_multispace,
};
use multispace::multigroup::is_multigroup;
use multispace::{eval_chain, ExprChain, FiniteUniverse};

fn main() -> multispace::Result<()> {
    for n in 1..=4 {
        let count = enumerate_latin_squares(n)?.len();
        println!("side {n}: {count} latin squares (lower bound {})", factorial_product(n));
    }

    let symbols = FiniteUniverse::new(["1", "2", "3"])?;
    let ms = latin_multispace(&symbols, &example_squares())?;
    for toks in [["1", "x1", "2", "x2", "3"], ["2", "x1", "3", "x2", "2"]] {
        let chain = ExprChain::from_tokens(&ms, &toks)?;
        let value = eval_chain(&ms, &chain)?.map_or("undefined", |x| ms.name_of(x));
        println!("{} = {value}", toks.join(" "));
    }
    let report = is_multigroup(&ms)?;
    println!("two fixed squares form a multi-group: {}", report.holds);

    let random = gen_latin_squares(5, 3, 42)?;
    let ms = latin_multispace(&FiniteUniverse::numbered(5), &random)?;
    println!("\nthree random squares of side 5 give {} components:", ms.components().len());
    for c in ms.components() {
        println!("  {} over {}", c.name(), ms.render_set(c.carrier()));
    }
    Ok(())
}
