use std::collections::BTreeSet;

use super::{Denominator, MiningMode, RuleKey, SequenceDatabase};

/// Integer-coded view of a database. Item ids follow the lexicographic
/// order of the item strings, so id order is the canonical rule order.
pub(crate) struct Encoded {
    vocab: Vec<String>,
    lens: Vec<u32>,
    /// Per sequence: `(item, first position, last position)` sorted by item.
    occ: Vec<Vec<(u32, u32, u32)>>,
    /// Per item: sorted ids of the sequences containing it.
    sids: Vec<Vec<u32>>,
}

impl Encoded {
    pub fn new(db: &SequenceDatabase) -> Self {
        let vocab: Vec<String> = db
            .sequences()
            .iter()
            .flatten()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut sids = vec![Vec::new(); vocab.len()];
        let mut occ = Vec::with_capacity(db.len());
        let mut lens = Vec::with_capacity(db.len());
        for (sid, seq) in db.sequences().iter().enumerate() {
            let mut positions: Vec<(u32, u32, u32)> = Vec::new();
            for (pos, item) in seq.iter().enumerate() {
                let id = vocab.binary_search(item).expect("item in vocabulary") as u32;
                match positions.iter_mut().find(|p| p.0 == id) {
                    Some(p) => p.2 = pos as u32,
                    None => positions.push((id, pos as u32, pos as u32)),
                }
            }
            positions.sort_unstable();
            for p in &positions {
                sids[p.0 as usize].push(sid as u32);
            }
            occ.push(positions);
            lens.push(seq.len() as u32);
        }
        Encoded {
            vocab,
            lens,
            occ,
            sids,
        }
    }

    pub fn num_items(&self) -> usize {
        self.vocab.len()
    }

    pub fn sids(&self, item: u32) -> &[u32] {
        &self.sids[item as usize]
    }

    pub fn occurrences(&self, sid: u32) -> &[(u32, u32, u32)] {
        &self.occ[sid as usize]
    }

    pub fn len_of(&self, sid: u32) -> u32 {
        self.lens[sid as usize]
    }

    /// `(first, last)` position of `item` in sequence `sid`.
    pub fn positions(&self, sid: u32, item: u32) -> Option<(u32, u32)> {
        let occ = &self.occ[sid as usize];
        occ.binary_search_by_key(&item, |p| p.0)
            .ok()
            .map(|i| (occ[i].1, occ[i].2))
    }

    pub fn decode(&self, items: &[u32]) -> Vec<String> {
        items
            .iter()
            .map(|&i| self.vocab[i as usize].clone())
            .collect()
    }

    fn encode(&self, items: &[String]) -> Option<Vec<u32>> {
        items
            .iter()
            .map(|s| self.vocab.binary_search(s).ok().map(|i| i as u32))
            .collect()
    }

    /// Largest first position of `items` in `sid`, if all are present.
    pub fn max_first(&self, sid: u32, items: &[u32]) -> Option<u32> {
        items
            .iter()
            .map(|&i| self.positions(sid, i).map(|p| p.0))
            .try_fold(0, |acc, p| p.map(|p| acc.max(p)))
    }

    /// Smallest last position of `items` in `sid`, if all are present.
    pub fn min_last(&self, sid: u32, items: &[u32]) -> Option<u32> {
        items
            .iter()
            .map(|&i| self.positions(sid, i).map(|p| p.1))
            .try_fold(u32::MAX, |acc, p| p.map(|p| acc.min(p)))
    }

    /// Confidence denominator of antecedent `items` given the sequences containing them.
    pub fn denominator(&self, items: &[u32], tids: &[u32], mode: Denominator) -> usize {
        match mode {
            Denominator::ItemSupport => tids.len(),
            Denominator::AntecedentQualified => tids
                .iter()
                .filter(|&&sid| {
                    self.max_first(sid, items)
                        .is_some_and(|f| f + 1 < self.len_of(sid))
                })
                .count(),
        }
    }

    pub fn rule_stats(
        &self,
        key: &RuleKey,
        mode: MiningMode,
        denominator: Denominator,
    ) -> Option<(usize, f64, usize)> {
        let x = self.encode(&key.antecedent)?;
        let y = self.encode(&key.consequent)?;
        let tids_x: Vec<u32> = (0..self.occ.len() as u32)
            .filter(|&sid| self.max_first(sid, &x).is_some())
            .collect();
        let mut support = 0;
        for &sid in &tids_x {
            let Some(last_y) = self.min_last(sid, &y) else {
                continue;
            };
            let ok = match mode {
                MiningMode::Unordered => true,
                MiningMode::Ordered => self.max_first(sid, &x).expect("x present") < last_y,
            };
            support += usize::from(ok);
        }
        let denom = match mode {
            MiningMode::Unordered => tids_x.len(),
            MiningMode::Ordered => self.denominator(&x, &tids_x, denominator),
        };
        (denom > 0).then(|| (support, support as f64 / denom as f64, denom))
    }
}

pub(crate) fn intersect(a: &[u32], b: &[u32]) -> Vec<u32> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
