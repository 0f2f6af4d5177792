//! Reference implementations used only by tests. None of this shares code
//! with the library's distance routines.

#![allow(dead_code)]

use std::collections::VecDeque;

/// Levenshtein straight from its recursive definition, memoised on the
/// suffix pair so the full small-alphabet sweep stays tractable.
pub fn recursive_levenshtein(a: &[u8], b: &[u8]) -> usize {
    fn go(a: &[u8], b: &[u8], i: usize, j: usize, memo: &mut Vec<Vec<Option<usize>>>) -> usize {
        if let Some(d) = memo[i][j] {
            return d;
        }
        let d = if i == a.len() {
            b.len() - j
        } else if j == b.len() {
            a.len() - i
        } else {
            let delete = go(a, b, i + 1, j, memo) + 1;
            let insert = go(a, b, i, j + 1, memo) + 1;
            let replace = go(a, b, i + 1, j + 1, memo) + usize::from(a[i] != b[j]);
            delete.min(insert).min(replace)
        };
        memo[i][j] = Some(d);
        d
    }
    let mut memo = vec![vec![None; b.len() + 1]; a.len() + 1];
    go(a, b, 0, 0, &mut memo)
}

/// Optimal string alignment distance from its recursive definition.
pub fn recursive_osa(a: &[u8], b: &[u8]) -> usize {
    fn go(a: &[u8], b: &[u8], i: usize, j: usize, memo: &mut Vec<Vec<Option<usize>>>) -> usize {
        if let Some(d) = memo[i][j] {
            return d;
        }
        let d = if i == a.len() {
            b.len() - j
        } else if j == b.len() {
            a.len() - i
        } else {
            let mut best = (go(a, b, i + 1, j, memo) + 1)
                .min(go(a, b, i, j + 1, memo) + 1)
                .min(go(a, b, i + 1, j + 1, memo) + usize::from(a[i] != b[j]));
            if i + 1 < a.len() && j + 1 < b.len() && a[i] == b[j + 1] && a[i + 1] == b[j] {
                best = best.min(go(a, b, i + 2, j + 2, memo) + 1);
            }
            best
        };
        memo[i][j] = Some(d);
        d
    }
    let mut memo = vec![vec![None; b.len() + 1]; a.len() + 1];
    go(a, b, 0, 0, &mut memo)
}

/// Unmemoised exponential recursion, for short strings only.
pub fn naive_levenshtein(a: &[u8], b: &[u8]) -> usize {
    match (a.split_first(), b.split_first()) {
        (None, _) => b.len(),
        (_, None) => a.len(),
        (Some((x, ra)), Some((y, rb))) => (naive_levenshtein(ra, b) + 1)
            .min(naive_levenshtein(a, rb) + 1)
            .min(naive_levenshtein(ra, rb) + usize::from(x != y)),
    }
}

pub fn hamming(a: &str, b: &str) -> usize {
    assert_eq!(a.chars().count(), b.chars().count());
    a.chars().zip(b.chars()).filter(|(x, y)| x != y).count()
}

/// Every string over `alphabet` with length `0..=max_len`, shortest first.
pub fn all_strings(alphabet: &[u8], max_len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for s in &layer {
            for &c in alphabet {
                let mut t = s.clone();
                t.push(c);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Shortest edit-path lengths from `source` to every string in `universe`,
/// found by breadth-first search over single-character edits. `universe`
/// must be closed under edits that stay within its maximum length.
pub fn bfs_edit_distances(source: usize, universe: &[Vec<u8>], alphabet: &[u8]) -> Vec<usize> {
    let max_len = universe.iter().map(Vec::len).max().unwrap_or(0);
    let index: std::collections::HashMap<&[u8], usize> =
        universe.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let mut dist = vec![usize::MAX; universe.len()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    let mut scratch = Vec::with_capacity(max_len + 1);

    while let Some(u) = queue.pop_front() {
        let s = &universe[u];
        let visit = |t: &[u8], dist: &mut Vec<usize>, queue: &mut VecDeque<usize>| {
            if let Some(&v) = index.get(t) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        };
        for k in 0..s.len() {
            scratch.clear();
            scratch.extend_from_slice(&s[..k]);
            scratch.extend_from_slice(&s[k + 1..]);
            visit(&scratch, &mut dist, &mut queue);
            for &c in alphabet {
                if c != s[k] {
                    scratch.clear();
                    scratch.extend_from_slice(s);
                    scratch[k] = c;
                    visit(&scratch, &mut dist, &mut queue);
                }
            }
        }
        if s.len() < max_len {
            for k in 0..=s.len() {
                for &c in alphabet {
                    scratch.clear();
                    scratch.extend_from_slice(&s[..k]);
                    scratch.push(c);
                    scratch.extend_from_slice(&s[k..]);
                    visit(&scratch, &mut dist, &mut queue);
                }
            }
        }
    }
    dist
}

pub fn sorted_chars(s: &str) -> Vec<char> {
    let mut v: Vec<char> = s.chars().collect();
    v.sort_unstable();
    v
}

/// Strip the Project Gutenberg header and licence footer if present.
pub fn strip_gutenberg(text: &str) -> &str {
    let start = text.find("*** START OF").and_then(|i| text[i..].find('\n').map(|j| i + j + 1)).unwrap_or(0);
    let end = text[start..].find("*** END OF").map(|i| start + i).unwrap_or(text.len());
    &text[start..end]
}

pub fn data_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("data").join(name)
}
