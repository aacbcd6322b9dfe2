//! Small combinatorial helpers.

/// Binomial coefficient with the usual convention that `n < k` gives 0.
/// Panics on overflow of the final value; intermediates use 128 bits.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}

/// All 4-element subsets of `[0, n)` in lexicographic order.
pub fn four_subsets(n: u32) -> impl Iterator<Item = [u32; 4]> {
    (0..n).flat_map(move |a| {
        ((a + 1)..n).flat_map(move |b| {
            ((b + 1)..n).flat_map(move |c| ((c + 1)..n).map(move |d| [a, b, c, d]))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(8, 4), 70);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(64, 4), 635376);
    }

    #[test]
    fn four_subsets_count() {
        assert_eq!(four_subsets(6).count() as u64, binomial(6, 4));
        assert_eq!(four_subsets(3).count(), 0);
        let first = four_subsets(5).next().unwrap();
        assert_eq!(first, [0, 1, 2, 3]);
    }
}
