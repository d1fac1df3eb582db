use crate::{Error, Result};

/// A non-crossing perfect matching of the `2n` boundary points of an `n`-strand diagram.
///
/// Boundary points are numbered counterclockwise: bottom points `0..n` left to right, then
/// top points right to left, so top position `i` is point `2n - 1 - i`. The matching is
/// stored as an involution on the points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarPairing {
    partner: Vec<u16>,
}

/// One side of a diagram boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary {
    Bottom(usize),
    Top(usize),
}

impl PlanarPairing {
    pub fn new(partner: Vec<u16>) -> Result<Self> {
        let p = Self { partner };
        p.validate()?;
        Ok(p)
    }

    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|p| (2 * n - 1 - p) as u16).collect();
        Self { partner }
    }

    /// Cup at bottom positions `(i, i+1)` and cap at top positions `(i, i+1)`, zero-based.
    pub fn cup_cap(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        let (b0, b1) = (i, i + 1);
        let (t0, t1) = (2 * n - 1 - i, 2 * n - 2 - i);
        p.partner[b0] = b1 as u16;
        p.partner[b1] = b0 as u16;
        p.partner[t0] = t1 as u16;
        p.partner[t1] = t0 as u16;
        p
    }

    pub fn strand_count(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, point: usize) -> usize {
        self.partner[point] as usize
    }

    pub fn point(&self, b: Boundary) -> usize {
        match b {
            Boundary::Bottom(i) => i,
            Boundary::Top(i) => 2 * self.strand_count() - 1 - i,
        }
    }

    pub fn boundary(&self, point: usize) -> Boundary {
        let n = self.strand_count();
        if point < n {
            Boundary::Bottom(point)
        } else {
            Boundary::Top(2 * n - 1 - point)
        }
    }

    /// Checks the involution property and planarity by parenthesis nesting.
    pub fn validate(&self) -> Result<()> {
        let m = self.partner.len();
        if m == 0 || m % 2 == 1 {
            return Err(Error::InvalidPairing(format!("{m} boundary points")));
        }
        for (p, &q) in self.partner.iter().enumerate() {
            let q = q as usize;
            if q >= m || q == p || self.partner[q] as usize != p {
                return Err(Error::InvalidPairing(format!("point {p} is not matched once")));
            }
        }
        if !self.is_planar() {
            return Err(Error::InvalidPairing("crossing arcs".into()));
        }
        Ok(())
    }

    pub fn is_planar(&self) -> bool {
        let mut stack = Vec::new();
        for (p, &q) in self.partner.iter().enumerate() {
            let q = q as usize;
            if q > p {
                stack.push(p);
            } else if stack.pop() != Some(q) {
                return false;
            }
        }
        stack.is_empty()
    }

    /// Number of through strings.
    pub fn propagating_number(&self) -> usize {
        let n = self.strand_count();
        (0..n).filter(|&p| self.partner(p) >= n).count()
    }

    /// Stacks `self` on top of `below`; returns the resulting pairing and the number of
    /// closed loops removed.
    pub fn stack_over(&self, below: &Self) -> (Self, usize) {
        let n = self.strand_count();
        let mut partner = vec![u16::MAX; 2 * n];
        let mut middle_seen = vec![false; n];

        // Follow the path starting at an outer point until it exits at another outer point.
        let trace = |start_in_below: bool, start: usize, seen: &mut [bool]| -> usize {
            let (mut in_below, mut point) = (start_in_below, start);
            loop {
                if in_below {
                    let q = below.partner(point);
                    if q < n {
                        return q;
                    }
                    let mid = 2 * n - 1 - q;
                    seen[mid] = true;
                    in_below = false;
                    point = mid;
                } else {
                    let q = self.partner(point);
                    if q >= n {
                        return q;
                    }
                    seen[q] = true;
                    in_below = true;
                    point = 2 * n - 1 - q;
                }
            }
        };

        for p in 0..2 * n {
            if partner[p] != u16::MAX {
                continue;
            }
            let q = if p < n {
                trace(true, p, &mut middle_seen)
            } else {
                trace(false, p, &mut middle_seen)
            };
            partner[p] = q as u16;
            partner[q] = p as u16;
        }

        let mut loops = 0;
        for start in 0..n {
            if middle_seen[start] {
                continue;
            }
            loops += 1;
            let mut mid = start;
            loop {
                middle_seen[mid] = true;
                // into the diagram above, back down to the middle, then through the one below
                let up = self.partner(mid);
                middle_seen[up] = true;
                let down = below.partner(2 * n - 1 - up);
                mid = 2 * n - 1 - down;
                if mid == start {
                    break;
                }
            }
        }
        (Self { partner }, loops)
    }

    /// Number of loops after joining top position `i` to bottom position `i` for every `i`.
    pub fn closure_loops(&self) -> usize {
        let m = self.partner.len();
        let mut seen = vec![false; m];
        let mut loops = 0;
        for start in 0..m {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut p = start;
            loop {
                seen[p] = true;
                let q = self.partner(p);
                seen[q] = true;
                // closure arc joins point q to its mirror on the other side
                p = m - 1 - q;
                if p == start {
                    break;
                }
            }
        }
        loops
    }

    /// Enumerates all planar pairings on `n` strands (Catalan many).
    pub fn enumerate(n: usize) -> Vec<Self> {
        fn rec(points: &[usize], partner: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
            if points.is_empty() {
                out.push(partner.clone());
                return;
            }
            let first = points[0];
            for k in (1..points.len()).step_by(2) {
                let other = points[k];
                partner[first] = other as u16;
                partner[other] = first as u16;
                let (inside, outside) = (&points[1..k], &points[k + 1..]);
                let mut inner = Vec::new();
                rec(inside, partner, &mut inner);
                for filled in inner {
                    let mut tmp = filled;
                    rec(outside, &mut tmp, out);
                }
            }
        }
        let points: Vec<usize> = (0..2 * n).collect();
        let mut out = Vec::new();
        rec(&points, &mut vec![0; 2 * n], &mut out);
        out.into_iter().map(|partner| Self { partner }).collect()
    }
}
