//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

/// Chords of a convex `n`-gon on vertices `0..n` that are not sides.
pub fn chords(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 2..n {
            if !(a == 0 && b == n - 1) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Two chords cross when exactly one endpoint of one lies strictly inside
/// the arc spanned by the other.
pub fn interleave(x: (usize, usize), y: (usize, usize)) -> bool {
    let inside = |v: usize| x.0 < v && v < x.1;
    let shares = x.0 == y.0 || x.0 == y.1 || x.1 == y.0 || x.1 == y.1;
    !shares && (inside(y.0) != inside(y.1))
}

/// Number of non-crossing chord sets of the `n`-gon with exactly `k` chords,
/// by backtracking over the chord list.
pub fn brute_dissections(n: usize, k: usize) -> u64 {
    fn go(
        chords: &[(usize, usize)],
        from: usize,
        chosen: &mut Vec<(usize, usize)>,
        k: usize,
    ) -> u64 {
        if chosen.len() == k {
            return 1;
        }
        let mut total = 0;
        for i in from..chords.len() {
            if chosen.iter().all(|&c| !interleave(c, chords[i])) {
                chosen.push(chords[i]);
                total += go(chords, i + 1, chosen, k);
                chosen.pop();
            }
        }
        total
    }
    go(&chords(n), 0, &mut Vec::new(), k)
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Kirkman–Cayley count of dissections of an `n`-gon by `k` diagonals.
pub fn kirkman_cayley(n: u64, k: u64) -> u128 {
    binomial(n - 3, k) * binomial(n + k - 1, k) / (k as u128 + 1)
}

pub fn catalan(m: u64) -> u128 {
    binomial(2 * m, m) / (m as u128 + 1)
}

pub fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}
