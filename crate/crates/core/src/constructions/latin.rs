use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Largest side whose squares are enumerated exhaustively (576 at side 4).
pub const LATIN_ENUMERATION_LIMIT: usize = 4;

/// An `n × n` grid over the symbols `0..n`, each appearing once per row and
/// once per column.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatinSquare {
    grid: Vec<Vec<usize>>,
}

impl LatinSquare {
    pub fn new(grid: Vec<Vec<usize>>) -> Result<Self> {
        if let Some((r, c)) = latin_violation(&grid) {
            return Err(Error::Input(format!("not a Latin square at row {r}, column {c}")));
        }
        Ok(LatinSquare { grid })
    }

    pub fn side(&self) -> usize {
        self.grid.len()
    }

    pub fn grid(&self) -> &[Vec<usize>] {
        &self.grid
    }

    pub fn get(&self, r: usize, c: usize) -> usize {
        self.grid[r][c]
    }
}

/// First cell breaking squareness, range, or row/column uniqueness.
pub fn latin_violation(grid: &[Vec<usize>]) -> Option<(usize, usize)> {
    let n = grid.len();
    for (r, row) in grid.iter().enumerate() {
        if row.len() != n {
            return Some((r, row.len().min(n)));
        }
        for (c, &v) in row.iter().enumerate() {
            if v >= n || row[..c].contains(&v) || grid[..r].iter().any(|above| above[c] == v) {
                return Some((r, c));
            }
        }
    }
    None
}

/// ∏_{s=1}^{n} s!.
pub fn factorial_product(n: usize) -> u128 {
    (1..=n as u128)
        .map(|s| (1..=s).product::<u128>())
        .product()
}

struct Filler<'a> {
    n: usize,
    grid: Vec<Vec<usize>>,
    row_used: Vec<Vec<bool>>,
    col_used: Vec<Vec<bool>>,
    order: Option<&'a mut ChaCha8Rng>,
}

impl<'a> Filler<'a> {
    fn new(n: usize) -> Self {
        Filler {
            n,
            grid: vec![vec![0; n]; n],
            row_used: vec![vec![false; n]; n],
            col_used: vec![vec![false; n]; n],
            order: None,
        }
    }

    /// Depth-first fill in row-major order; `visit` returns `false` to stop.
    fn fill(&mut self, cell: usize, visit: &mut dyn FnMut(&[Vec<usize>]) -> bool) -> bool {
        let n = self.n;
        if cell == n * n {
            return visit(&self.grid);
        }
        let (r, c) = (cell / n, cell % n);
        let mut symbols: Vec<usize> = (0..n).collect();
        if let Some(rng) = self.order.as_deref_mut() {
            symbols.shuffle(rng);
        }
        for v in symbols {
            if self.row_used[r][v] || self.col_used[c][v] {
                continue;
            }
            self.grid[r][c] = v;
            self.row_used[r][v] = true;
            self.col_used[c][v] = true;
            let go_on = self.fill(cell + 1, visit);
            self.row_used[r][v] = false;
            self.col_used[c][v] = false;
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// Every Latin square of side `n`, in lexicographic order.
pub fn enumerate_latin_squares(n: usize) -> Result<Vec<LatinSquare>> {
    crate::error::check_size("Latin square side", n, LATIN_ENUMERATION_LIMIT)?;
    let mut out = Vec::new();
    Filler::new(n).fill(0, &mut |g| {
        out.push(LatinSquare { grid: g.to_vec() });
        true
    });
    Ok(out)
}

/// `k` pairwise-distinct squares of side `n`, reproducible for a fixed seed.
///
/// Up to side 4 the full list is enumerated and a seeded sample taken; larger
/// sides use randomized backtracking and report a capacity error if `k`
/// distinct squares are not reached.
pub fn gen_latin_squares(n: usize, k: usize, seed: u64) -> Result<Vec<LatinSquare>> {
    if n < 2 {
        return Err(Error::Input("Latin squares need side at least 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n <= LATIN_ENUMERATION_LIMIT {
        let mut all = enumerate_latin_squares(n)?;
        if k > all.len() {
            return Err(Error::Capacity(format!(
                "only {} Latin squares of side {n} exist, {k} requested",
                all.len()
            )));
        }
        all.shuffle(&mut rng);
        all.truncate(k);
        return Ok(all);
    }
    let mut out: Vec<LatinSquare> = Vec::with_capacity(k);
    let attempts = 20 * k + 20;
    for _ in 0..attempts {
        if out.len() == k {
            break;
        }
        let mut filler = Filler::new(n);
        filler.order = Some(&mut rng);
        let mut found = None;
        filler.fill(0, &mut |g| {
            found = Some(LatinSquare { grid: g.to_vec() });
            false
        });
        if let Some(sq) = found {
            if !out.contains(&sq) {
                out.push(sq);
            }
        }
    }
    if out.len() < k {
        return Err(Error::Capacity(format!(
            "found {} distinct Latin squares of side {n} after {attempts} attempts, {k} requested",
            out.len()
        )));
    }
    Ok(out)
}
