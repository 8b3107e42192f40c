use std::fmt;

use serde::{Deserialize, Serialize};

/// A permutation of `0..n` in one-line notation, with its inversion count.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
    length: usize,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        let length = inversions(&images);
        Some(Permutation { images, length })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect(), length: 0 }
    }

    /// The adjacent transposition swapping `i` and `i + 1`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, i + 1);
        Permutation { images, length: 1 }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// Inversion count, which is the Coxeter length.
    pub fn length(&self) -> usize {
        self.length
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let images: Vec<usize> = other.images.iter().map(|&x| self.images[x]).collect();
        let length = inversions(&images);
        Permutation { images, length }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images, length: self.length }
    }

    pub fn is_even(&self) -> bool {
        self.length.is_multiple_of(2)
    }

    /// All permutations of `0..n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation::new(cur.clone()).unwrap());
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else { break };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    /// Cycle notation on the points 1..n, e.g. "(1 2 3)"; "()" for the identity.
    pub fn cycle_string(&self) -> String {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut s = String::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push((x + 1).to_string());
                x = self.images[x];
            }
            s.push_str(&format!("({})", cyc.join(" ")));
        }
        if s.is_empty() {
            "()".into()
        } else {
            s
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

fn inversions(v: &[usize]) -> usize {
    let mut c = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                c += 1;
            }
        }
    }
    c
}
