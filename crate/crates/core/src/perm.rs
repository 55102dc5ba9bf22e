//! Permutations of `0..n` stored as image vectors.

/// `p[i]` is the image of `i`.
pub type Perm = Vec<usize>;

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

pub fn inverse(p: &[usize]) -> Perm {
    let mut q = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        q[x] = i;
    }
    q
}

/// `(p ∘ q)(i) = p[q[i]]`.
pub fn compose(p: &[usize], q: &[usize]) -> Perm {
    q.iter().map(|&x| p[x]).collect()
}

/// Cycles in order of their least element, each starting at that element.
pub fn cycles(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut c = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            c.push(x);
            x = p[x];
        }
        out.push(c);
    }
    out
}

pub fn cycle_count(p: &[usize]) -> usize {
    cycles(p).len()
}

pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Option<Perm> {
    let mut p = vec![usize::MAX; n];
    for c in cycles {
        for (i, &x) in c.iter().enumerate() {
            let y = c[(i + 1) % c.len()];
            if x >= n || y >= n || p[x] != usize::MAX {
                return None;
            }
            p[x] = y;
        }
    }
    for (i, x) in p.iter_mut().enumerate() {
        if *x == usize::MAX {
            *x = i;
        }
    }
    is_permutation(&p).then_some(p)
}

/// All permutations of `0..n` in lexicographic order.
pub fn all(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut p = identity(n);
    loop {
        out.push(p.clone());
        if !next_permutation(&mut p) {
            return out;
        }
    }
}

/// Advances `p` to the next permutation in lexicographic order.
pub fn next_permutation<T: Ord>(p: &mut [T]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_round_trip() {
        let p = vec![1, 2, 0, 4, 3, 5];
        let c = cycles(&p);
        assert_eq!(c, vec![vec![0, 1, 2], vec![3, 4], vec![5]]);
        assert_eq!(from_cycles(6, &c).unwrap(), p);
    }

    #[test]
    fn inverse_composes_to_identity() {
        let p = vec![2, 0, 3, 1];
        assert_eq!(compose(&p, &inverse(&p)), identity(4));
    }

    #[test]
    fn enumerates_factorial_many() {
        assert_eq!(all(4).len(), 24);
        assert_eq!(all(0).len(), 1);
    }
}
