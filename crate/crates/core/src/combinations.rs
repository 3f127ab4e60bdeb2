//! k-subsets of `0..n` in lexicographic order, with ranking so that the
//! sequence can be cut into contiguous chunks.

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        // c * (n - i) is divisible by (i + 1) after the multiplication
        c = match c.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    c
}

/// The `rank`-th k-subset of `0..n` in lexicographic order, or `None`
/// when `rank >= C(n, k)`.
pub fn unrank(n: usize, k: usize, mut rank: u128) -> Option<Vec<usize>> {
    if rank >= binomial(n, k) {
        return None;
    }
    let mut out = Vec::with_capacity(k);
    let mut next = 0;
    for slot in 0..k {
        let mut c = next;
        loop {
            let with_c = binomial(n - c - 1, k - slot - 1);
            if rank < with_c {
                break;
            }
            rank -= with_c;
            c += 1;
        }
        out.push(c);
        next = c + 1;
    }
    Some(out)
}

/// Lexicographic rank of a strictly increasing k-subset of `0..n`.
pub fn rank(n: usize, combo: &[usize]) -> u128 {
    let k = combo.len();
    let mut r = 0;
    let mut next = 0;
    for (slot, &c) in combo.iter().enumerate() {
        for skipped in next..c {
            r += binomial(n - skipped - 1, k - slot - 1);
        }
        next = c + 1;
    }
    r
}

/// Advance `combo` to its lexicographic successor among k-subsets of
/// `0..n`. Returns `false` (leaving `combo` unspecified) after the last one.
pub fn advance(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in (i + 1)..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Iterator over all k-subsets of `0..n`, lexicographic.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let mut cur = self.current.take().expect("checked above");
        if advance(&mut cur, self.n) {
            self.current = Some(cur);
        }
        Some(out)
    }
}
