//! Brute-force counts and textbook formulas, independent of generating
//! functions and of the library's own elementary module.

use riordan::Rational;

fn q(n: i64) -> Rational {
    Rational::from(n)
}

/// Lattice paths of `ups` up-steps and `downs` down-steps that never dip
/// below the start, counted step by step over heights.
pub fn ballot_paths(ups: usize, downs: usize) -> u64 {
    // ways[u][h] after placing u up-steps, current height h
    let steps = ups + downs;
    let mut ways = vec![vec![0u64; steps + 2]; ups + 1];
    ways[0][0] = 1;
    for s in 0..steps {
        let mut next = vec![vec![0u64; steps + 2]; ups + 1];
        for u in 0..=ups {
            let d = s as i64 - u as i64;
            if d < 0 || d as usize > downs {
                continue;
            }
            for h in 0..=steps {
                let w = ways[u][h];
                if w == 0 {
                    continue;
                }
                if u < ups {
                    next[u + 1][h + 1] += w;
                }
                if (d as usize) < downs && h > 0 {
                    next[u][h - 1] += w;
                }
            }
        }
        ways = next;
    }
    ways[ups][ups - downs.min(ups)]
}

/// Dyck paths of semilength `n`, by enumerating all up/down words.
pub fn dyck_words(n: usize) -> u64 {
    (0u64..1 << (2 * n))
        .filter(|&w| {
            let mut h = 0i32;
            for i in 0..2 * n {
                h += if w >> i & 1 == 1 { 1 } else { -1 };
                if h < 0 {
                    return false;
                }
            }
            h == 0
        })
        .count() as u64
}

/// `[s,s](n,k)`: paths with `n` ups and `n-k` downs staying weakly above 0.
pub fn ballot_triangle(size: usize) -> Vec<Vec<Rational>> {
    (0..=size)
        .map(|n| (0..=n).map(|k| q(ballot_paths(n, n - k) as i64)).collect())
        .collect()
}

/// Number of set partitions of `{0..n}` into exactly `k` blocks, for all
/// `k`, by enumerating restricted growth strings.
pub fn set_partitions_by_blocks(n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    if n == 0 {
        counts[0] = 1;
        return counts;
    }
    let mut word = vec![0usize; n];
    loop {
        let blocks = word.iter().max().unwrap() + 1;
        counts[blocks] += 1;
        // advance the restricted growth string
        let mut i = n - 1;
        loop {
            let bound = word[..i].iter().max().map_or(0, |m| m + 1);
            if i > 0 && word[i] < bound {
                word[i] += 1;
                for w in word.iter_mut().skip(i + 1) {
                    *w = 0;
                }
                break;
            }
            if i <= 1 {
                return counts;
            }
            i -= 1;
        }
    }
}

/// Signed Stirling numbers of the first kind as coefficients of
/// `x (x-1) ... (x-n+1)`, expanded with integer arithmetic.
pub fn falling_factorial_coeffs(n: usize) -> Vec<i128> {
    let mut c = vec![1i128];
    for i in 0..n as i128 {
        let mut next = vec![0i128; c.len() + 1];
        for (j, &a) in c.iter().enumerate() {
            next[j + 1] += a;
            next[j] -= i * a;
        }
        c = next;
    }
    c
}

/// Permutations of `n` points counted by number of cycles (unsigned).
pub fn permutations_by_cycles(n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for s in 0..n {
            if !seen[s] {
                cycles += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = perm[x];
                }
            }
        }
        counts[cycles] += 1;
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return counts;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

/// `F_m`, counted as binary words of length `m - 2` with no two adjacent
/// ones (`m >= 2`); `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci_by_words(m: usize) -> u64 {
    match m {
        0 => 0,
        1 => 1,
        _ => {
            let len = m - 2;
            (0u64..1 << len).filter(|w| w & (w >> 1) == 0).count() as u64
        }
    }
}

/// Bernoulli numbers with `B_1 = -1/2`, by the Akiyama-Tanigawa algorithm.
pub fn bernoulli(n: usize) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut a: Vec<Rational> = Vec::new();
    for m in 0..=n {
        a.push(Rational::one() / q(m as i64 + 1));
        for j in (1..=m).rev() {
            a[j - 1] = q(j as i64) * (&a[j - 1] - &a[j]);
        }
        out.push(a[0].clone());
    }
    if n >= 1 {
        out[1] = -out[1].clone();
    }
    out
}

/// Cauchy numbers `int_0^1 (x)_n dx`.
pub fn cauchy(n: usize) -> Vec<Rational> {
    (0..=n)
        .map(|m| {
            falling_factorial_coeffs(m)
                .iter()
                .enumerate()
                .map(|(k, &c)| q(c as i64) / q(k as i64 + 1))
                .sum()
        })
        .collect()
}

/// Catalan numbers as Dyck-path counts.
pub fn catalan(n: usize) -> Vec<Rational> {
    (0..=n).map(|m| q(dyck_words(m) as i64)).collect()
}

/// Bell numbers as total set-partition counts.
pub fn bell(n: usize) -> Vec<Rational> {
    (0..=n)
        .map(|m| q(set_partitions_by_blocks(m).iter().sum::<u64>() as i64))
        .collect()
}
