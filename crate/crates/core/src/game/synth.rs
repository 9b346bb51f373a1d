//! Bottom-up enumeration of the denotations reachable at each width.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{Game, TeamSet};
use crate::error::Error;
use crate::formula::{BinOp, Formula, Literal};

/// Default bound on combined pairs for [`min_separating_width`].
const DEFAULT_WORK: u64 = 50_000_000;

#[derive(Clone, Debug)]
enum Recipe {
    Lit(Literal),
    Bin(BinOp, u32, u32),
}

/// Every set of teams definable over the game's signature, grouped by the
/// least width of a defining formula, each with its lexicographically least
/// printed witness of that width.
pub struct Synthesis<'g> {
    game: &'g Game,
    ops: Vec<BinOp>,
    fams: Vec<TeamSet>,
    recipe: Vec<Recipe>,
    text: Vec<String>,
    index: BTreeMap<TeamSet, u32>,
    /// `levels[w]`: ids of the families of least width `w`; `levels[0]` is empty.
    levels: Vec<Vec<u32>>,
    work: u64,
}

/// Outcome of [`min_separating_width`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WidthResult {
    /// The least width, with the least printed witness of that width.
    Exact { width: usize, witness: Formula },
    /// No formula over the signature separates the sets.
    Unattainable,
    /// Nothing of width below the bound separates; the search stopped there.
    AtLeast(usize),
}

impl<'g> Synthesis<'g> {
    pub fn new(game: &'g Game) -> Result<Synthesis<'g>, Error> {
        let mut s = Synthesis {
            game,
            ops: game.signature().bin_ops().collect(),
            fams: Vec::new(),
            recipe: Vec::new(),
            text: Vec::new(),
            index: BTreeMap::new(),
            levels: alloc::vec![Vec::new(), Vec::new()],
            work: 0,
        };
        for (l, den) in game.literals() {
            let text = Formula::Lit(l.clone()).to_string();
            s.offer(1, *den, Recipe::Lit(l.clone()), text);
        }
        Ok(s)
    }

    /// Largest width computed so far.
    pub fn computed_width(&self) -> usize {
        self.levels.len() - 1
    }

    /// Whether no formula of any larger width can define anything new.
    pub fn is_closed(&self) -> bool {
        let w = self.computed_width();
        ((w + 1).div_ceil(2)..=w).all(|v| self.levels[v].is_empty())
    }

    /// Computes the levels up to width `w`, combining at most `limit` pairs
    /// in total.
    pub fn extend_to(&mut self, w: usize, limit: u64) -> Result<(), Error> {
        while self.computed_width() < w {
            if self.is_closed() {
                self.levels.push(Vec::new());
                continue;
            }
            self.next_level(limit)?;
        }
        Ok(())
    }

    fn next_level(&mut self, limit: u64) -> Result<(), Error> {
        let w = self.computed_width() + 1;
        let start = self.level_start(w);
        let ops = self.ops.clone();
        self.levels.push(Vec::new());
        for w1 in 1..=w / 2 {
            let w2 = w - w1;
            let left = self.levels[w1].clone();
            let right = self.levels[w2].clone();
            for (i, &x) in left.iter().enumerate() {
                let from = if w1 == w2 { i } else { 0 };
                for &y in &right[from..] {
                    self.work += 1;
                    if self.work > limit {
                        return Err(Error::SearchLimit(format!(
                            "synthesis combined more than {limit} pairs"
                        )));
                    }
                    for &op in &ops {
                        let (dx, dy) = (self.fams[x as usize], self.fams[y as usize]);
                        let den = self.combine(op, &dx, &dy);
                        if let Some(&id) = self.index.get(&den) {
                            if (id as usize) < start {
                                continue;
                            }
                        }
                        let (tx, ty) = (&self.text[x as usize], &self.text[y as usize]);
                        let sym = op.symbol();
                        let xy = format!("({tx} {sym} {ty})");
                        let yx = format!("({ty} {sym} {tx})");
                        let (text, recipe) = if yx < xy {
                            (yx, Recipe::Bin(op, y, x))
                        } else {
                            (xy, Recipe::Bin(op, x, y))
                        };
                        self.offer(w, den, recipe, text);
                    }
                }
            }
        }
        Ok(())
    }

    /// First id belonging to level `w` (ids are assigned level by level).
    fn level_start(&self, w: usize) -> usize {
        self.levels[..w].iter().map(Vec::len).sum()
    }

    fn offer(&mut self, w: usize, den: TeamSet, recipe: Recipe, text: String) {
        match self.index.get(&den) {
            Some(&id) => {
                if text < self.text[id as usize] {
                    self.text[id as usize] = text;
                    self.recipe[id as usize] = recipe;
                }
            }
            None => {
                let id = self.fams.len() as u32;
                self.fams.push(den);
                self.recipe.push(recipe);
                self.text.push(text);
                self.index.insert(den, id);
                self.levels[w].push(id);
            }
        }
    }

    /// The teams satisfying `l op r` given the teams satisfying `l` and `r`.
    pub fn combine(&self, op: BinOp, l: &TeamSet, r: &TeamSet) -> TeamSet {
        let m = self.game.assignments();
        match op {
            BinOp::And => l.intersection(r),
            BinOp::BoolOr => l.union(r),
            BinOp::Or => l.union_product(r),
            BinOp::StrictOr => l.disjoint_product(r),
            BinOp::CoAnd => l
                .complement(m)
                .union_product(&r.complement(m))
                .complement(m),
            BinOp::StrictCoAnd => l
                .complement(m)
                .disjoint_product(&r.complement(m))
                .complement(m),
        }
    }

    /// Families of least width at most `w` (within the computed levels).
    pub fn families_upto(&self, w: usize) -> impl Iterator<Item = TeamSet> + '_ {
        let top = w.min(self.computed_width());
        self.levels[1..=top]
            .iter()
            .flatten()
            .map(|&id| self.fams[id as usize])
    }

    /// Number of families found at least width `w`.
    pub fn level_size(&self, w: usize) -> usize {
        self.levels.get(w).map_or(0, Vec::len)
    }

    /// The least width of a formula defining exactly `den`, if computed.
    pub fn width_of(&self, den: &TeamSet) -> Option<usize> {
        let id = *self.index.get(den)? as usize;
        let mut seen = 0;
        for (w, level) in self.levels.iter().enumerate() {
            seen += level.len();
            if id < seen {
                return Some(w);
            }
        }
        None
    }

    /// The recorded witness for `den`.
    pub fn witness(&self, den: &TeamSet) -> Option<Formula> {
        self.index.get(den).map(|&id| self.build(id))
    }

    fn build(&self, id: u32) -> Formula {
        match &self.recipe[id as usize] {
            Recipe::Lit(l) => Formula::Lit(l.clone()),
            Recipe::Bin(op, x, y) => Formula::bin(*op, self.build(*x), self.build(*y)),
        }
    }

    /// Least-width separating family among level `w`, by printed witness.
    fn best_separator(&self, w: usize, a: &TeamSet, b: &TeamSet) -> Option<u32> {
        self.levels[w]
            .iter()
            .copied()
            .filter(|&id| Game::separates(&self.fams[id as usize], a, b))
            .min_by(|&x, &y| self.text[x as usize].cmp(&self.text[y as usize]))
    }
}

/// The least width of a formula over the game's signature that is true on
/// every team of `a` and false on every team of `b`, searching widths up to
/// `max_width`.
pub fn min_separating_width(game: &Game, a: &TeamSet, b: &TeamSet, max_width: usize) -> Result<WidthResult, Error> {
    let all = game.all_teams();
    if !a.is_subset(&all) || !b.is_subset(&all) {
        return Err(Error::MemberOutOfRange);
    }
    if a.intersects(b) {
        return Ok(WidthResult::Unattainable);
    }
    let mut synth = Synthesis::new(game)?;
    for w in 1..=max_width {
        synth.extend_to(w, DEFAULT_WORK)?;
        if let Some(id) = synth.best_separator(w, a, b) {
            return Ok(WidthResult::Exact {
                width: w,
                witness: synth.build(id),
            });
        }
        if synth.is_closed() {
            return Ok(WidthResult::Unattainable);
        }
    }
    Ok(WidthResult::AtLeast(max_width + 1))
}
