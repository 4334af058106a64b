//! The algebra of `q`-generic matrices as a rewriting system.
//!
//! Elements are [`NCPoly`]s: finitely supported maps from PBW-normal words in
//! the generators `x_ij` to Laurent polynomials in `q`. Products are reduced
//! with the four directed `q`-generic rules (plus cross-block commutation in
//! two-block contexts).

mod commutative;
mod poly;
mod rewrite;

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use thiserror::Error;

pub use commutative::{specialize_q1, CommPoly};
pub use poly::{nc_add, nc_eq, nc_mul, nc_sub, NCPoly};
pub use rewrite::{confluence_smoke, pbw_normal_word_count, reduce_stepwise, ConfluenceReport, Strategy};

use crate::scalars::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operands belong to different algebra contexts")]
    ContextMismatch,
    #[error("generator {0} is outside the context")]
    OutOfContext(Generator),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}

/// `x_ij` of block `block`; ordered by block, then row, then column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub block: u8,
    pub row: u8,
    pub col: u8,
}

impl Generator {
    pub fn new(row: usize, col: usize) -> Self {
        Generator::in_block(0, row, col)
    }

    pub fn in_block(block: u8, row: usize, col: usize) -> Self {
        Generator { block, row: row as u8, col: col as u8 }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.block {
            0 => 'x',
            1 => 'y',
            _ => 'z',
        };
        write!(f, "{name}[{},{}]", self.row, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NCWord(pub Vec<Generator>);

impl NCWord {
    pub fn empty() -> Self {
        NCWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }
}

impl fmt::Display for NCWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join("*"))
    }
}

type Memo = HashMap<(NCWord, Generator), Arc<Vec<(NCWord, LaurentPoly)>>>;

static NEXT_CONTEXT: AtomicU64 = AtomicU64::new(1);

/// `rows × cols` generators per block, one or two blocks.
///
/// Shareable across threads; the normal-form memo is behind a mutex.
pub struct AlgebraContext {
    id: u64,
    rows: usize,
    cols: usize,
    blocks: u8,
    cross_commute: bool,
    fault: bool,
    memo: Mutex<Memo>,
}

impl fmt::Debug for AlgebraContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgebraContext")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("blocks", &self.blocks)
            .field("cross_commute", &self.cross_commute)
            .finish()
    }
}

impl AlgebraContext {
    pub fn new(rows: usize, cols: usize) -> Arc<Self> {
        Self::build(rows, cols, 1, false, false)
    }

    /// Two blocks `x` and `y`; `cross_commute` makes `x_ij y_kl = y_kl x_ij`.
    pub fn two_blocks(rows: usize, cols: usize, cross_commute: bool) -> Arc<Self> {
        Self::build(rows, cols, 2, cross_commute, false)
    }

    /// A context whose fourth rule carries the wrong sign. Only for
    /// exercising failure reporting.
    pub fn with_fault(rows: usize, cols: usize) -> Arc<Self> {
        Self::build(rows, cols, 1, false, true)
    }

    fn build(rows: usize, cols: usize, blocks: u8, cross_commute: bool, fault: bool) -> Arc<Self> {
        assert!(rows < 256 && cols < 256, "context too large");
        Arc::new(AlgebraContext {
            id: NEXT_CONTEXT.fetch_add(1, Ordering::Relaxed),
            rows,
            cols,
            blocks,
            cross_commute,
            fault,
            memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn blocks(&self) -> u8 {
        self.blocks
    }

    pub fn cross_commute(&self) -> bool {
        self.cross_commute
    }

    pub fn is_faulty(&self) -> bool {
        self.fault
    }

    pub fn contains(&self, g: Generator) -> bool {
        g.block < self.blocks && (1..=self.rows).contains(&(g.row as usize)) && (1..=self.cols).contains(&(g.col as usize))
    }

    /// Every generator, in the monomial order.
    pub fn generators(&self) -> Vec<Generator> {
        let mut out = Vec::new();
        for b in 0..self.blocks {
            for r in 1..=self.rows {
                for c in 1..=self.cols {
                    out.push(Generator::in_block(b, r, c));
                }
            }
        }
        out
    }
}

/// Normal forms of words in the generators of a row/column submatrix agree
/// with those computed in a fresh context of the submatrix's size, after
/// relabeling. `rows` and `cols` must be ascending.
pub fn check_subcontext(big: &Arc<AlgebraContext>, rows: &[usize], cols: &[usize], seed: u64, trials: usize) -> Result<bool, AlgebraError> {
    use rand::Rng;
    if !rows.windows(2).all(|w| w[0] < w[1]) || !cols.windows(2).all(|w| w[0] < w[1]) {
        return Err(AlgebraError::ShapeMismatch("submatrix indices must be ascending".into()));
    }
    let small = AlgebraContext::new(rows.len(), cols.len());
    let mut rng = crate::check::trial_rng(seed, "subcontext", &[rows.len() as u64, cols.len() as u64], 0);
    let relabel = |g: &Generator| -> Generator {
        let r = rows.iter().position(|&x| x == g.row as usize).expect("row in submatrix") + 1;
        let c = cols.iter().position(|&x| x == g.col as usize).expect("col in submatrix") + 1;
        Generator::new(r, c)
    };
    for _ in 0..trials {
        let len = rng.random_range(1..=5);
        let w: Vec<Generator> = (0..len)
            .map(|_| Generator::new(rows[rng.random_range(0..rows.len())], cols[rng.random_range(0..cols.len())]))
            .collect();
        let in_big = NCPoly::word(big, &w)?;
        let in_small = NCPoly::word(&small, &w.iter().map(relabel).collect::<Vec<_>>())?;
        let mapped: Vec<(Vec<Generator>, LaurentPoly)> =
            in_big.terms().iter().map(|(word, c)| (word.letters().iter().map(relabel).collect(), c.clone())).collect();
        if NCPoly::normal_form(&small, &mapped)? != in_small {
            return Ok(false);
        }
    }
    Ok(true)
}
