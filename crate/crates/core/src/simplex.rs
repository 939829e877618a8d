//! Monotone maps between finite ordinals [n] = {0, ..., n}, the index arithmetic
//! of the simplex category.
//!
//! A map is stored as its value list: `f[k] = f(k)` for `k` in `0..=a` where the
//! domain is `[a]`. Lists are nondecreasing.

/// All monotone maps `[a] -> [n]`, in lexicographic order of their value lists.
pub fn monotone_maps(a: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(a + 1);
    fn rec(cur: &mut Vec<usize>, len: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().copied().unwrap_or(0);
        for v in lo..=max {
            cur.push(v);
            rec(cur, len, max, out);
            cur.pop();
        }
    }
    rec(&mut cur, a + 1, n, &mut out);
    out
}

/// The coface `delta_i : [n-1] -> [n]` (skips `i`).
pub fn coface(n: usize, i: usize) -> Vec<usize> {
    assert!(n >= 1 && i <= n);
    (0..n).map(|k| if k < i { k } else { k + 1 }).collect()
}

/// The codegeneracy `sigma_i : [n+1] -> [n]` (repeats `i`).
pub fn codegeneracy(n: usize, i: usize) -> Vec<usize> {
    assert!(i <= n);
    (0..=(n + 1)).map(|k| if k <= i { k } else { k - 1 }).collect()
}

/// Composite `g . f` of `f : [a] -> [b]` and `g : [b] -> [c]`.
pub fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    f.iter().map(|&v| g[v]).collect()
}

/// Is `f` the identity of its domain?
pub fn is_identity(f: &[usize]) -> bool {
    f.iter().enumerate().all(|(k, &v)| k == v)
}

/// One reduction step of the epi-mono factorization, used to act by an
/// arbitrary monotone map through the generating faces and degeneracies.
///
/// For `f : [a] -> [n]` not the identity, returns either
/// `Face(i, f')` with `f = delta_i . f'` (f' into `[n-1]`), or
/// `Degeneracy(j, f'')` with `f = f'' . sigma_j` (f'' from `[a-1]`).
pub enum Step {
    Face(usize, Vec<usize>),
    Degeneracy(usize, Vec<usize>),
}

pub fn peel(f: &[usize], n: usize) -> Option<Step> {
    if f.len() == n + 1 && is_identity(f) {
        return None;
    }
    // Missing value: peel off the largest one as a coface.
    let mut present = vec![false; n + 1];
    for &v in f {
        present[v] = true;
    }
    if let Some(i) = (0..=n).rev().find(|&i| !present[i]) {
        let reduced: Vec<usize> = f.iter().map(|&v| if v > i { v - 1 } else { v }).collect();
        return Some(Step::Face(i, reduced));
    }
    // Surjective but not the identity: there is a repeat.
    let j = (0..f.len() - 1).find(|&k| f[k] == f[k + 1]).expect("repeat");
    let mut reduced = f.to_vec();
    reduced.remove(j);
    Some(Step::Degeneracy(j, reduced))
}

/// Does the image of `f : [a] -> [n]` avoid some `i` in `[n]` outside `allowed`?
/// That is: is `f` a simplex of the horn `Lambda^allowed[n]`?
pub fn in_horn(f: &[usize], n: usize, allowed: &[usize]) -> bool {
    let mut present = vec![false; n + 1];
    for &v in f {
        present[v] = true;
    }
    (0..=n).any(|i| !present[i] && !allowed.contains(&i))
}

/// Is a subset of `[n]` (given as a sorted list) convex, i.e. an interval?
/// The empty set counts as convex.
pub fn is_convex(subset: &[usize]) -> bool {
    match (subset.first(), subset.last()) {
        (Some(&lo), Some(&hi)) => subset.len() == hi - lo + 1,
        _ => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monotone_counts() {
        assert_eq!(monotone_maps(1, 1).len(), 3);
        assert_eq!(monotone_maps(2, 1).len(), 4);
        assert_eq!(monotone_maps(3, 3).len(), 35);
    }

    #[test]
    fn peel_reconstructs() {
        // act through generators agrees with direct composition on a sample
        for f in monotone_maps(2, 3) {
            let mut g = f.clone();
            let mut n = 3usize;
            let mut faces = Vec::new();
            let mut degs = Vec::new();
            loop {
                match peel(&g, n) {
                    None => break,
                    Some(Step::Face(i, red)) => {
                        faces.push((n, i));
                        g = red;
                        n -= 1;
                    }
                    Some(Step::Degeneracy(j, red)) => {
                        degs.push(j);
                        g = red;
                    }
                }
            }
            // rebuild: f = delta_{i1} . delta_{i2} ... . id . sigma_{j_last} ... compose back
            let mut rebuilt: Vec<usize> = (0..=n).collect();
            for (m, i) in faces.iter().rev() {
                rebuilt = compose(&rebuilt, &coface(*m, *i));
            }
            for j in degs.iter().rev() {
                let dom = rebuilt.len() - 1;
                rebuilt = compose(&codegeneracy(dom, *j), &rebuilt);
            }
            assert_eq!(rebuilt, f);
        }
    }

    #[test]
    fn convexity() {
        assert!(is_convex(&[]));
        assert!(is_convex(&[2]));
        assert!(is_convex(&[1, 2, 3]));
        assert!(!is_convex(&[0, 2]));
        assert!(!is_convex(&[1, 3]));
    }
}
