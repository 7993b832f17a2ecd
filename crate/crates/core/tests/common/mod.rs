#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use hatelex::mining::{Denominator, MiningMode, RuleKey, RuleMiningConfig, SequenceDatabase};
use rand::Rng;

pub type RuleTable = BTreeMap<RuleKey, (usize, f64, usize)>;

fn contains_all(window: &[String], items: &[String]) -> bool {
    items.iter().all(|i| window.contains(i))
}

fn subsets(vocab: &[String], max: usize) -> Vec<Vec<String>> {
    (1u32..1 << vocab.len())
        .filter(|m| m.count_ones() as usize <= max)
        .map(|m| {
            (0..vocab.len())
                .filter(|i| m >> i & 1 == 1)
                .map(|i| vocab[i].clone())
                .collect()
        })
        .collect()
}

/// Figures of one rule by definition: unordered support counts sequences
/// containing both sides; an ordered sequence supports `X -> Y` when some
/// split point puts all of `X` in the prefix and all of `Y` in the suffix.
pub fn brute_force_stats(
    seqs: &[Vec<String>],
    x: &[String],
    y: &[String],
    mode: MiningMode,
    denominator: Denominator,
) -> (usize, usize) {
    let mut support = 0;
    let mut denom = 0;
    for s in seqs {
        match mode {
            MiningMode::Unordered => {
                if contains_all(s, x) {
                    denom += 1;
                    support += usize::from(contains_all(s, y));
                }
            }
            MiningMode::Ordered => {
                let qualified = match denominator {
                    Denominator::ItemSupport => contains_all(s, x),
                    Denominator::AntecedentQualified => {
                        !s.is_empty() && contains_all(&s[..s.len() - 1], x)
                    }
                };
                denom += usize::from(qualified);
                support += usize::from(
                    (1..s.len()).any(|k| contains_all(&s[..k], x) && contains_all(&s[k..], y)),
                );
            }
        }
    }
    (support, denom)
}

/// Every rule over disjoint non-empty item sets that meets `config`.
pub fn brute_force_rules(
    db: &SequenceDatabase,
    config: &RuleMiningConfig,
    mode: MiningMode,
) -> RuleTable {
    let vocab: Vec<String> = db
        .sequences()
        .iter()
        .flatten()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut out = RuleTable::new();
    for x in subsets(&vocab, config.max_antecedent) {
        for y in subsets(&vocab, config.max_consequent) {
            if y.iter().any(|i| x.contains(i)) {
                continue;
            }
            let (s, d) = brute_force_stats(db.sequences(), &x, &y, mode, config.denominator);
            if s >= config.min_sup && d > 0 && s as f64 / d as f64 >= config.min_conf {
                out.insert(
                    RuleKey::new(x.clone(), y.clone()),
                    (s, s as f64 / d as f64, d),
                );
            }
        }
    }
    out
}

pub fn random_db(
    rng: &mut impl Rng,
    max_seqs: usize,
    max_symbols: usize,
    max_len: usize,
) -> SequenceDatabase {
    let symbols = rng.gen_range(1..=max_symbols);
    let n = rng.gen_range(1..=max_seqs);
    let seqs = (0..n).map(|_| {
        let len = rng.gen_range(1..=max_len);
        (0..len)
            .map(|_| format!("s{}", rng.gen_range(0..symbols)))
            .collect::<Vec<_>>()
    });
    SequenceDatabase::new("random", seqs)
}

pub fn db_from(name: &str, seqs: &[&[&str]]) -> SequenceDatabase {
    SequenceDatabase::new(
        name,
        seqs.iter()
            .map(|s| s.iter().map(|t| t.to_string()).collect::<Vec<_>>()),
    )
}

/// 19 sequences: N(anglo)=3, N(sp*c)=18, both=2, sp*c qualified as an
/// ordered antecedent in 15.
pub fn section_three_db() -> SequenceDatabase {
    let mut seqs: Vec<&[&str]> = Vec::new();
    seqs.extend([&["sp*c", "anglo"][..]; 2]);
    seqs.push(&["anglo", "x"]);
    seqs.extend([&["sp*c", "k*ll"][..]; 13]);
    seqs.extend([&["k*ll", "sp*c"][..]; 3]);
    db_from("section3", &seqs)
}

/// Three databases sharing exactly one strong ordered pattern `p -> q`
/// plus database-specific noise.
pub fn planted_dbs() -> Vec<SequenceDatabase> {
    vec![
        db_from(
            "d1",
            &[
                &["p", "q"],
                &["p", "q", "a"],
                &["p", "x", "q"],
                &["a", "b"],
                &["b", "a"],
            ],
        ),
        db_from(
            "d2",
            &[
                &["p", "q"],
                &["c", "p", "q"],
                &["p", "q", "c"],
                &["c", "d"],
                &["d", "c", "d"],
            ],
        ),
        db_from(
            "d3",
            &[
                &["p", "q"],
                &["p", "e", "q"],
                &["e", "f"],
                &["f", "e"],
                &["p", "q", "f"],
            ],
        ),
    ]
}

/// The two five-rule sets behind the two concepts of the paper's example.
pub fn table_five_rules() -> Vec<RuleKey> {
    vec![
        RuleKey::new(["a*s"], ["b*tch"]),
        RuleKey::new(["boss"], ["b*tch", "a*s"]),
        RuleKey::new(["a*s", "boss"], ["b*tch"]),
        RuleKey::new(["boss"], ["b*tch"]),
        RuleKey::new(["boss"], ["a*s"]),
        RuleKey::new(["white"], ["Europe"]),
        RuleKey::new(["race"], ["white", "Europe"]),
        RuleKey::new(["white", "race"], ["Europe"]),
        RuleKey::new(["race"], ["white"]),
        RuleKey::new(["race"], ["Europe"]),
    ]
}

/// Whether `edges` is exactly the covering relation of strict inclusion over `nodes`.
pub fn is_hasse_cover(nodes: &[Vec<String>], edges: &BTreeSet<(String, String)>) -> bool {
    let sub =
        |a: &Vec<String>, b: &Vec<String>| a.len() < b.len() && a.iter().all(|t| b.contains(t));
    let mut expected = BTreeSet::new();
    for a in nodes {
        for b in nodes {
            if sub(a, b) && !nodes.iter().any(|c| sub(a, c) && sub(c, b)) {
                expected.insert((a.join("_"), b.join("_")));
            }
        }
    }
    &expected == edges
}
