use super::{Overpartition, Partition};

/// Iterator over the partitions of `n` in reverse lexicographic order.
#[derive(Clone, Debug)]
pub struct PartitionIter {
    current: Option<Vec<u32>>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        let out = Partition { parts: current.clone() };
        self.current = successor(current);
        Some(out)
    }
}

/// Next partition in reverse lexicographic order: strip trailing 1s, lower the
/// last part above 1 by one, and refill greedily with that value.
fn successor(mut parts: Vec<u32>) -> Option<Vec<u32>> {
    let mut ones = 0;
    while parts.last() == Some(&1) {
        parts.pop();
        ones += 1;
    }
    let last = parts.pop()?;
    let fill = last - 1;
    let mut remaining = ones + last;
    while remaining >= fill {
        parts.push(fill);
        remaining -= fill;
    }
    if remaining > 0 {
        parts.push(remaining);
    }
    Some(parts)
}

/// All partitions of `n`; `n = 0` yields exactly the empty partition.
pub fn enumerate_partitions(n: u32) -> PartitionIter {
    PartitionIter {
        current: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

/// Constraints on the parts of an enumerated partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartSpec {
    pub min_part: u32,
    pub max_part: u32,
    pub distinct: bool,
}

impl PartSpec {
    pub fn unrestricted() -> Self {
        Self {
            min_part: 1,
            max_part: u32::MAX,
            distinct: false,
        }
    }

    pub fn distinct() -> Self {
        Self {
            distinct: true,
            ..Self::unrestricted()
        }
    }

    pub fn min_part(self, min_part: u32) -> Self {
        Self {
            min_part: min_part.max(1),
            ..self
        }
    }

    pub fn max_part(self, max_part: u32) -> Self {
        Self { max_part, ..self }
    }
}

/// Calls `visit` once for every partition of `n` obeying `spec`.
pub fn for_each_partition(n: u32, spec: PartSpec, mut visit: impl FnMut(&Partition)) {
    let mut stack = Partition::empty();
    recurse(n, spec.max_part.min(n), spec, &mut stack, &mut visit);
}

fn recurse(remaining: u32, cap: u32, spec: PartSpec, stack: &mut Partition, visit: &mut impl FnMut(&Partition)) {
    if remaining == 0 {
        visit(stack);
        return;
    }
    let mut part = cap.min(remaining);
    while part >= spec.min_part {
        stack.parts.push(part);
        let next_cap = if spec.distinct { part - 1 } else { part };
        recurse(remaining - part, next_cap, spec, stack, visit);
        stack.parts.pop();
        part -= 1;
    }
}

/// All overpartitions of `n`, built as (distinct overlined parts, ordinary
/// partition) pairs.
pub fn enumerate_overpartitions(n: u32) -> impl Iterator<Item = Overpartition> {
    let mut out = Vec::new();
    for overlined_size in 0..=n {
        let mut overlined = Vec::new();
        for_each_partition(overlined_size, PartSpec::distinct(), |p| overlined.push(p.clone()));
        let plain: Vec<Partition> = enumerate_partitions(n - overlined_size).collect();
        for o in &overlined {
            for p in &plain {
                out.push(Overpartition::from_split(o, p));
            }
        }
    }
    out.into_iter()
}
