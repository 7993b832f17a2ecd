//! Sequential rule growth. Rules start from every ordered item pair and grow
//! by adding larger items: right expansion grows the consequent, left
//! expansion grows the antecedent, and a left expansion is never followed by
//! a right one, so each rule is reached along exactly one path.

use std::collections::BTreeMap;

use super::encoded::{intersect, Encoded};
use super::{passes, RawRule, RuleMiningConfig};

struct Miner<'a> {
    enc: &'a Encoded,
    config: &'a RuleMiningConfig,
    out: Vec<RawRule>,
}

pub(crate) fn mine(enc: &Encoded, config: &RuleMiningConfig) -> Vec<RawRule> {
    let mut miner = Miner {
        enc,
        config,
        out: Vec::new(),
    };
    miner.run();
    miner.out
}

impl Miner<'_> {
    fn run(&mut self) {
        let min_sup = self.config.min_sup;
        let frequent: Vec<u32> = (0..self.enc.num_items() as u32)
            .filter(|&i| self.enc.sids(i).len() >= min_sup)
            .collect();
        for (k, &i) in frequent.iter().enumerate() {
            for &j in &frequent[k + 1..] {
                let common = intersect(self.enc.sids(i), self.enc.sids(j));
                if common.len() < min_sup {
                    continue;
                }
                let mut ij = Vec::new();
                let mut ji = Vec::new();
                for sid in common {
                    let (fi, li) = self.enc.positions(sid, i).expect("i in sid");
                    let (fj, lj) = self.enc.positions(sid, j).expect("j in sid");
                    if fi < lj {
                        ij.push(sid);
                    }
                    if fj < li {
                        ji.push(sid);
                    }
                }
                if ij.len() >= min_sup {
                    self.grow(&[i], &[j], self.enc.sids(i), &ij);
                }
                if ji.len() >= min_sup {
                    self.grow(&[j], &[i], self.enc.sids(j), &ji);
                }
            }
        }
    }

    fn grow(&mut self, x: &[u32], y: &[u32], tids_x: &[u32], tids_xy: &[u32]) {
        self.emit(x, y, tids_x, tids_xy);
        if x.len() < self.config.max_antecedent {
            self.expand_left(x, y, tids_x, tids_xy);
        }
        if y.len() < self.config.max_consequent {
            self.expand_right(x, y, tids_x, tids_xy);
        }
    }

    fn emit(&mut self, x: &[u32], y: &[u32], tids_x: &[u32], tids_xy: &[u32]) {
        let denominator = self.enc.denominator(x, tids_x, self.config.denominator);
        if passes(tids_xy.len(), denominator, self.config) {
            self.out.push(RawRule {
                antecedent: x.to_vec(),
                consequent: y.to_vec(),
                support: tids_xy.len(),
                denominator,
            });
        }
    }

    /// Adds to `x` an item greater than all of `x` that occurs before the
    /// last occurrence of every consequent item.
    fn expand_left(&mut self, x: &[u32], y: &[u32], tids_x: &[u32], tids_xy: &[u32]) {
        let max_x = *x.last().expect("non-empty antecedent");
        let mut candidates: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for &sid in tids_xy {
            let last_y = self.enc.min_last(sid, y).expect("y in sid");
            for &(c, first, _) in self.enc.occurrences(sid) {
                if c > max_x && first < last_y && !y.contains(&c) {
                    candidates.entry(c).or_default().push(sid);
                }
            }
        }
        for (c, tids) in candidates {
            if tids.len() < self.config.min_sup {
                continue;
            }
            let mut grown = x.to_vec();
            grown.push(c);
            let tids_grown = intersect(tids_x, self.enc.sids(c));
            self.emit(&grown, y, &tids_grown, &tids);
            if grown.len() < self.config.max_antecedent {
                self.expand_left(&grown, y, &tids_grown, &tids);
            }
        }
    }

    /// Adds to `y` an item greater than all of `y` whose last occurrence
    /// follows the first occurrence of every antecedent item.
    fn expand_right(&mut self, x: &[u32], y: &[u32], tids_x: &[u32], tids_xy: &[u32]) {
        let max_y = *y.last().expect("non-empty consequent");
        let mut candidates: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for &sid in tids_xy {
            let first_x = self.enc.max_first(sid, x).expect("x in sid");
            for &(c, _, last) in self.enc.occurrences(sid) {
                if c > max_y && last > first_x && !x.contains(&c) {
                    candidates.entry(c).or_default().push(sid);
                }
            }
        }
        for (c, tids) in candidates {
            if tids.len() < self.config.min_sup {
                continue;
            }
            let mut grown = y.to_vec();
            grown.push(c);
            self.emit(x, &grown, tids_x, &tids);
            if x.len() < self.config.max_antecedent {
                self.expand_left(x, &grown, tids_x, &tids);
            }
            if grown.len() < self.config.max_consequent {
                self.expand_right(x, &grown, tids_x, &tids);
            }
        }
    }
}
