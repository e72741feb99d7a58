use serde::Serialize;

/// Axis-parallel hyperplanes `x_axis = axes[axis][index]` inside the box
/// `bounds`. Coordinates on each axis are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridArrangement {
    pub axes: Vec<Vec<i64>>,
    pub bounds: Vec<(i64, i64)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HyperplaneId {
    pub axis: usize,
    pub index: usize,
}

/// Box cell of the sampled hyperplanes, with the unsampled hyperplanes
/// passing strictly through its interior.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridCell {
    pub slabs: Vec<usize>,
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
    pub crossing: Vec<HyperplaneId>,
}

impl GridArrangement {
    /// Sorts each axis; bounds default to one unit beyond the extreme
    /// coordinates.
    pub fn new(mut axes: Vec<Vec<i64>>) -> Self {
        for a in axes.iter_mut() {
            a.sort_unstable();
        }
        let bounds = axes
            .iter()
            .map(|a| match (a.first(), a.last()) {
                (Some(&lo), Some(&hi)) => (lo - 1, hi + 1),
                _ => (0, 1),
            })
            .collect();
        GridArrangement { axes, bounds }
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn len(&self) -> usize {
        self.axes.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn coord(&self, h: HyperplaneId) -> i64 {
        self.axes[h.axis][h.index]
    }
}

/// Cells of the arrangement of the sampled hyperplanes, in row-major slab
/// order with the last axis varying fastest.
pub fn grid_cells(grid: &GridArrangement, sample: &[HyperplaneId]) -> Vec<GridCell> {
    let d = grid.dim();
    let mut cuts: Vec<Vec<i64>> = Vec::with_capacity(d);
    let mut members: Vec<Vec<Vec<usize>>> = Vec::with_capacity(d);
    for axis in 0..d {
        let (lo, hi) = grid.bounds[axis];
        let mut sampled = vec![false; grid.axes[axis].len()];
        let mut c = vec![lo, hi];
        for h in sample.iter().filter(|h| h.axis == axis) {
            sampled[h.index] = true;
            c.push(grid.axes[axis][h.index]);
        }
        c.sort_unstable();
        c.dedup();
        let mut per_slab: Vec<Vec<usize>> = vec![Vec::new(); c.len() - 1];
        for (i, &x) in grid.axes[axis].iter().enumerate() {
            if sampled[i] {
                continue;
            }
            let s = c.partition_point(|&v| v < x);
            // Strictly inside slab s − 1 when x is not a cut.
            if s > 0 && s < c.len() && c[s] != x {
                per_slab[s - 1].push(i);
            }
        }
        cuts.push(c);
        members.push(per_slab);
    }
    let counts: Vec<usize> = cuts.iter().map(|c| c.len() - 1).collect();
    let total: usize = counts.iter().product();
    let mut cells = Vec::with_capacity(total);
    let mut idx = vec![0usize; d];
    for _ in 0..total {
        let mut crossing = Vec::new();
        for axis in 0..d {
            crossing.extend(members[axis][idx[axis]].iter().map(|&index| HyperplaneId { axis, index }));
        }
        cells.push(GridCell {
            slabs: idx.clone(),
            lo: (0..d).map(|a| cuts[a][idx[a]]).collect(),
            hi: (0..d).map(|a| cuts[a][idx[a] + 1]).collect(),
            crossing,
        });
        for axis in (0..d).rev() {
            idx[axis] += 1;
            if idx[axis] < counts[axis] {
                break;
            }
            idx[axis] = 0;
        }
    }
    cells
}
