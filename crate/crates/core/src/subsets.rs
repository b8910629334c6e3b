use alloc::vec::Vec;
use num_bigint::BigUint;

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // rightmost position that can still advance
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            if cur[pos] < n - k + pos {
                cur[pos] += 1;
                for q in pos + 1..k {
                    cur[q] = cur[q - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                return out;
            }
        }
        if k == 0 {
            return out;
        }
    }
}

/// All subsets of `0..n` with at most `max` elements, by size and then lexicographically.
pub fn subsets_up_to(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in 0..=max.min(n) {
        out.extend(combinations(n, size));
    }
    out
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// Elements of `0..n` not in the sorted slice `set`.
pub(crate) fn complement(n: usize, set: &[usize]) -> Vec<usize> {
    (0..n).filter(|x| set.binary_search(x).is_err()).collect()
}
