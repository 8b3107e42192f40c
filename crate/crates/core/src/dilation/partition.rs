use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A set partition of `0..n`, kept in canonical form: each block sorted and
/// blocks ordered by their least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartitionRepr", into = "PartitionRepr")]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartitionRepr {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<PartitionRepr> for Partition {
    type Error = Error;
    fn try_from(r: PartitionRepr) -> Result<Self> {
        Partition::new(r.n, r.blocks)
    }
}

impl From<Partition> for PartitionRepr {
    fn from(p: Partition) -> Self {
        PartitionRepr { n: p.n, blocks: p.blocks }
    }
}

impl Partition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut block_of = vec![usize::MAX; n];
        for b in blocks.iter_mut() {
            if b.is_empty() {
                return Err(Error::InvalidArgument("empty block".into()));
            }
            b.sort_unstable();
        }
        blocks.sort();
        for (i, b) in blocks.iter().enumerate() {
            for &x in b {
                if x >= n {
                    return Err(Error::InvalidArgument(format!("element {x} out of range 0..{n}")));
                }
                if block_of[x] != usize::MAX {
                    return Err(Error::InvalidArgument(format!("element {x} lies in two blocks")));
                }
                block_of[x] = i;
            }
        }
        if let Some(x) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidArgument(format!("element {x} is not covered")));
        }
        Ok(Partition { n, blocks, block_of })
    }

    /// From a restricted growth string `rgs[x]` = block index of x.
    pub fn from_labels(labels: &[usize]) -> Self {
        let k = labels.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (x, &b) in labels.iter().enumerate() {
            blocks[b].push(x);
        }
        blocks.retain(|b| !b.is_empty());
        Partition::new(labels.len(), blocks).expect("labels define a partition")
    }

    pub fn singletons(n: usize) -> Self {
        Partition::new(n, (0..n).map(|x| vec![x]).collect()).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn is_singletons(&self) -> bool {
        self.blocks.len() == self.n
    }

    pub fn display(&self, labels: Option<&[String]>) -> String {
        let show = |x: usize| labels.map_or_else(|| x.to_string(), |l| l[x].clone());
        self.blocks
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(|&x| show(x)).collect::<Vec<_>>().join(",")))
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let p = Partition::new(4, vec![vec![3, 1], vec![2], vec![0]]).unwrap();
        assert_eq!(p.blocks(), &[vec![0], vec![1, 3], vec![2]]);
        assert_eq!(p.block_of(3), 1);
        assert!(Partition::new(3, vec![vec![0, 1]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert_eq!(Partition::from_labels(&[0, 1, 0, 1]), Partition::new(4, vec![vec![0, 2], vec![1, 3]]).unwrap());
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), p);
    }
}
