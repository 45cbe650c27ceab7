//! Conjugating one Coxeter element into another by shift moves.
//!
//! A letter at the front of a Coxeter word may be moved to the back by
//! conjugating with it, and adjacent letters whose nodes are not joined in
//! the diagram commute. On a forest every orientation of the diagram is
//! reachable by moving sources, so the two moves suffice.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::{CoxeterError, RootSystem};

/// One step applied to the current Coxeter word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum ShiftMove {
    /// Swap positions `pos` and `pos + 1`; the two nodes must not be joined.
    Commute { pos: usize },
    /// Conjugate by the first letter, moving it to the end.
    Rotate { generator: usize },
}

/// Result of [`coxeter_conjugator`]: `u·c_source·u⁻¹ = c_target`.
#[derive(Clone, Debug, Serialize)]
pub struct ConjugatorCertificate {
    /// The conjugating word `u` (0-based generators, left to right).
    pub word: Vec<usize>,
    /// Replayable moves turning the source word into the target word.
    pub moves: Vec<ShiftMove>,
    /// Whether `u` passed the root-permutation check.
    pub verified: bool,
}

fn edges(rs: &RootSystem) -> Vec<(usize, usize)> {
    let n = rs.rank();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| rs.datum.adjacent(i, j))
        .collect()
}

/// Bit `e` set iff the lower endpoint of edge `e` comes first in `order`.
fn orientation(edges: &[(usize, usize)], order: &[usize]) -> u64 {
    let mut pos = vec![0usize; order.len()];
    for (p, &s) in order.iter().enumerate() {
        pos[s] = p;
    }
    edges
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| pos[a] < pos[b])
        .fold(0, |acc, (e, _)| acc | (1 << e))
}

/// Whether `s` precedes all its neighbours.
fn is_source(edges: &[(usize, usize)], o: u64, s: usize) -> bool {
    edges.iter().enumerate().all(|(e, &(a, b))| {
        let lower_first = o >> e & 1 == 1;
        (a != s || lower_first) && (b != s || !lower_first)
    })
}

fn flip(edges: &[(usize, usize)], o: u64, s: usize) -> u64 {
    edges
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| a == s || b == s)
        .fold(o, |acc, (e, _)| acc ^ (1 << e))
}

/// Find `u` with `u·c_source·u⁻¹ = c_target` for two node orderings.
pub fn coxeter_conjugator(
    rs: &RootSystem,
    source: &[usize],
    target: &[usize],
) -> Result<ConjugatorCertificate, CoxeterError> {
    rs.check_ordering(source)?;
    rs.check_ordering(target)?;
    let es = edges(rs);
    if es.len() > 63 {
        return Err(CoxeterError::NotAnOrdering);
    }
    let start = orientation(&es, source);
    let goal = orientation(&es, target);

    // Breadth-first search over orientations; moves are source flips.
    let mut parent: HashMap<u64, (u64, usize)> = HashMap::new();
    let mut queue = VecDeque::from([start]);
    parent.insert(start, (start, usize::MAX));
    while let Some(o) = queue.pop_front() {
        if o == goal {
            break;
        }
        for s in 0..rs.rank() {
            if is_source(&es, o, s) {
                let next = flip(&es, o, s);
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                    e.insert((o, s));
                    queue.push_back(next);
                }
            }
        }
    }
    if !parent.contains_key(&goal) {
        return Err(CoxeterError::NotAnOrdering);
    }
    let mut flips = Vec::new();
    let mut cur = goal;
    while cur != start {
        let (prev, s) = parent[&cur];
        flips.push(s);
        cur = prev;
    }
    flips.reverse();

    let mut word = source.to_vec();
    let mut moves = Vec::new();
    let mut u: Vec<usize> = Vec::new();
    for s in flips {
        let mut p = word.iter().position(|&x| x == s).unwrap();
        while p > 0 {
            moves.push(ShiftMove::Commute { pos: p - 1 });
            word.swap(p - 1, p);
            p -= 1;
        }
        moves.push(ShiftMove::Rotate { generator: s });
        word.rotate_left(1);
        u.insert(0, s);
    }
    // Same orientation: a bubble sort reaches the target using commutations
    // of non-joined nodes only.
    let mut rank_in_target = vec![0usize; rs.rank()];
    for (p, &s) in target.iter().enumerate() {
        rank_in_target[s] = p;
    }
    let n = word.len();
    for i in 0..n {
        for j in 0..n - 1 - i {
            if rank_in_target[word[j]] > rank_in_target[word[j + 1]] {
                moves.push(ShiftMove::Commute { pos: j });
                word.swap(j, j + 1);
            }
        }
    }
    debug_assert_eq!(word, target);

    let uel = rs.element_from_word(&u)?;
    let c_src = rs.coxeter_element(source)?;
    let c_tgt = rs.coxeter_element(target)?;
    let verified = rs.conjugate(&uel, &c_src) == c_tgt;
    Ok(ConjugatorCertificate {
        word: u,
        moves,
        verified,
    })
}

/// Replay moves on a source word without touching permutations.
///
/// Returns the final word and the accumulated conjugator, or an error if a
/// commutation swaps joined nodes.
pub fn replay_moves(
    rs: &RootSystem,
    source: &[usize],
    moves: &[ShiftMove],
) -> Result<(Vec<usize>, Vec<usize>), CoxeterError> {
    let mut word = source.to_vec();
    let mut u = Vec::new();
    for m in moves {
        match *m {
            ShiftMove::Commute { pos } => {
                if pos + 1 >= word.len() || rs.datum.adjacent(word[pos], word[pos + 1]) {
                    return Err(CoxeterError::IllegalMove);
                }
                word.swap(pos, pos + 1);
            }
            ShiftMove::Rotate { generator } => {
                if word.first() != Some(&generator) {
                    return Err(CoxeterError::IllegalMove);
                }
                word.rotate_left(1);
                u.insert(0, generator);
            }
        }
    }
    Ok((word, u))
}

/// Parse a comma-separated, 1-based node ordering such as `1,2,3`.
pub fn parse_ordering(s: &str) -> Result<Vec<usize>, CoxeterError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .ok()
                .filter(|&i| i >= 1)
                .map(|i| i - 1)
                .ok_or(CoxeterError::NotAnOrdering)
        })
        .collect()
}
