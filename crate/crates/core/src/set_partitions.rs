//! Set partitions of `0..n` in restricted-growth-string order.
//!
//! A restricted growth string `a` has `a[0] = 0` and
//! `a[i] <= 1 + max(a[..i])`; block `k` holds the positions with value `k`.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone)]
pub struct SetPartitions {
    rgs: Vec<usize>,
    /// `prefix_max[i] = max(rgs[..=i])`
    prefix_max: Vec<usize>,
    done: bool,
}

impl SetPartitions {
    pub fn new(n: usize) -> Self {
        SetPartitions {
            rgs: vec![0; n],
            prefix_max: vec![0; n],
            done: false,
        }
    }

    fn advance(&mut self) {
        let n = self.rgs.len();
        for i in (1..n).rev() {
            if self.rgs[i] <= self.prefix_max[i - 1] {
                self.rgs[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for SetPartitions {
    /// The restricted growth string.
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.rgs.clone();
        if self.rgs.is_empty() {
            self.done = true;
        } else {
            self.advance();
        }
        Some(out)
    }
}

/// Blocks of a restricted growth string, in order of first element.
pub fn blocks_of(rgs: &[usize]) -> Vec<Vec<usize>> {
    let k = rgs.iter().copied().max().map_or(0, |m| m + 1);
    let mut blocks = vec![Vec::new(); k];
    for (i, &b) in rgs.iter().enumerate() {
        blocks[b].push(i);
    }
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877];
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(SetPartitions::new(n).count(), b, "n = {n}");
        }
    }

    #[test]
    fn order_and_blocks() {
        let all: Vec<Vec<usize>> = SetPartitions::new(3).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![0, 1, 2]
            ]
        );
        assert_eq!(blocks_of(&[0, 1, 0, 2]), vec![vec![0, 2], vec![1], vec![3]]);
        assert!(blocks_of(&[]).is_empty());
    }
}
