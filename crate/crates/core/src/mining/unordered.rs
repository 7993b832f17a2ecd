//! Frequent itemsets by depth-first tidset intersection, then rules from
//! every split of each itemset.

use std::collections::HashMap;

use super::encoded::{intersect, Encoded};
use super::{passes, RawRule, RuleMiningConfig};

pub(crate) fn mine(enc: &Encoded, config: &RuleMiningConfig) -> Vec<RawRule> {
    let max_size = config.max_antecedent + config.max_consequent;
    let mut supports: HashMap<Vec<u32>, usize> = HashMap::new();
    let roots: Vec<(u32, Vec<u32>)> = (0..enc.num_items() as u32)
        .filter(|&i| enc.sids(i).len() >= config.min_sup)
        .map(|i| (i, enc.sids(i).to_vec()))
        .collect();
    let mut prefix = Vec::new();
    extend(&mut prefix, &roots, config.min_sup, max_size, &mut supports);

    let mut rules = Vec::new();
    for (itemset, &support) in &supports {
        let n = itemset.len();
        if n < 2 {
            continue;
        }
        for mask in 1..(1u32 << n) - 1 {
            let (x, y): (Vec<u32>, Vec<u32>) = {
                let mut x = Vec::new();
                let mut y = Vec::new();
                for (bit, &item) in itemset.iter().enumerate() {
                    if mask & (1 << bit) != 0 {
                        x.push(item);
                    } else {
                        y.push(item);
                    }
                }
                (x, y)
            };
            if x.len() > config.max_antecedent || y.len() > config.max_consequent {
                continue;
            }
            let denominator = supports[&x];
            if passes(support, denominator, config) {
                rules.push(RawRule {
                    antecedent: x,
                    consequent: y,
                    support,
                    denominator,
                });
            }
        }
    }
    rules
}

fn extend(
    prefix: &mut Vec<u32>,
    candidates: &[(u32, Vec<u32>)],
    min_sup: usize,
    max_size: usize,
    out: &mut HashMap<Vec<u32>, usize>,
) {
    for (k, (item, tids)) in candidates.iter().enumerate() {
        prefix.push(*item);
        out.insert(prefix.clone(), tids.len());
        if prefix.len() < max_size {
            let next: Vec<(u32, Vec<u32>)> = candidates[k + 1..]
                .iter()
                .filter_map(|(other, other_tids)| {
                    let common = intersect(tids, other_tids);
                    (common.len() >= min_sup).then_some((*other, common))
                })
                .collect();
            if !next.is_empty() {
                extend(prefix, &next, min_sup, max_size, out);
            }
        }
        prefix.pop();
    }
}
