use alloc::vec::Vec;

use super::Ballean;
use crate::union_find::UnionFind;
use crate::verdict::{Datum, Describe, Evidence, Verdict, Witness, WitnessKind};

/// Every ball `B(x, r)` of a ballean, computed once.
///
/// Indexed by radius position and point position in the ascending
/// enumerations of [`Ballean::radii`] and [`Ballean::points`].
pub struct BallCache<P, R> {
    pub points: Vec<P>,
    pub radii: Vec<R>,
    balls: Vec<Vec<Vec<P>>>,
}

impl<P: Copy + Ord, R: Clone> BallCache<P, R> {
    pub fn new<B: Ballean<Point = P, Radius = R>>(b: &B) -> Self {
        let points = b.points();
        let radii = b.radii();
        let balls = radii
            .iter()
            .map(|r| points.iter().map(|&x| b.ball(x, r)).collect())
            .collect();
        BallCache {
            points,
            radii,
            balls,
        }
    }

    pub fn index(&self, p: P) -> Option<usize> {
        self.points.binary_search(&p).ok()
    }

    pub fn ball(&self, radius: usize, point: usize) -> &[P] {
        &self.balls[radius][point]
    }

    /// `B(set, r)` for a set of point positions, ascending and deduplicated.
    pub fn ball_of_indices(&self, radius: usize, set: &[usize]) -> Vec<P> {
        let mut out: Vec<P> = set
            .iter()
            .flat_map(|&i| self.balls[radius][i].iter().copied())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// `B(A, δ) = ⋃_{y ∈ A} B(y, δ)`, ascending.
pub fn ball_of_set<B: Ballean>(b: &B, set: &[B::Point], radius: &B::Radius) -> Vec<B::Point> {
    let mut out: Vec<B::Point> = set.iter().flat_map(|&y| b.ball(y, radius)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn triple(a: Datum, b: Datum, c: Datum) -> Datum {
    Datum::Tuple(alloc::vec![a, b, c])
}

/// Checks containment, symmetry, chain monotonicity and upper
/// multiplicativity over every enumerated point and radius.
///
/// For a chain only the diagonal pairs `(β, β)` are searched: monotonicity,
/// checked first, makes `B(B(x,α),β) ⊆ B(B(x,β),β)` for `α ≤ β`. The least
/// multiplicativity radius `γ` for each pair is recorded as evidence.
pub fn verify_axioms<B: Ballean>(b: &B) -> Verdict {
    let cache = BallCache::new(b);
    let (points, radii) = (&cache.points, &cache.radii);

    for (ri, r) in radii.iter().enumerate() {
        for (xi, &x) in points.iter().enumerate() {
            let ball = cache.ball(ri, xi);
            if ball.binary_search(&x).is_err() {
                return Verdict::fail(
                    Witness::new(WitnessKind::CenterOutsideBall)
                        .with("center", x.describe())
                        .with("radius", r.describe()),
                );
            }
            for &y in ball {
                if !b.contains(y, r, x) {
                    return Verdict::fail(
                        Witness::new(WitnessKind::Asymmetric)
                            .with("center", x.describe())
                            .with("radius", r.describe())
                            .with("member", y.describe()),
                    );
                }
            }
        }
    }

    let chain = b.radii_form_chain();
    if chain {
        for ri in 1..radii.len() {
            for (xi, &x) in points.iter().enumerate() {
                if let Some(&y) = cache
                    .ball(ri - 1, xi)
                    .iter()
                    .find(|&&y| !b.contains(x, &radii[ri], y))
                {
                    return Verdict::fail(
                        Witness::new(WitnessKind::ChainNotMonotone)
                            .with("smaller", radii[ri - 1].describe())
                            .with("larger", radii[ri].describe())
                            .with("center", x.describe())
                            .with("member", y.describe()),
                    );
                }
            }
        }
    }

    let pairs: Vec<(usize, usize)> = if chain {
        (0..radii.len()).map(|i| (i, i)).collect()
    } else {
        (0..radii.len())
            .flat_map(|a| (0..radii.len()).map(move |c| (a, c)))
            .collect()
    };
    let mut table = Vec::with_capacity(pairs.len());
    for (ai, bi) in pairs {
        let bound = (0..radii.len()).find(|&gi| {
            points.iter().enumerate().all(|(xi, &x)| {
                cache.ball(ai, xi).iter().all(|&y| {
                    let yi = cache.index(y).expect("balls stay inside the support");
                    cache
                        .ball(bi, yi)
                        .iter()
                        .all(|&z| b.contains(x, &radii[gi], z))
                })
            })
        });
        match bound {
            Some(gi) => table.push(triple(
                radii[ai].describe(),
                radii[bi].describe(),
                radii[gi].describe(),
            )),
            None => {
                return Verdict::fail(
                    Witness::new(WitnessKind::NoMultiplicativeBound)
                        .with("alpha", radii[ai].describe())
                        .with("beta", radii[bi].describe()),
                )
            }
        }
    }
    Verdict::positive(b.scope(), Evidence::of("gamma", Datum::Tuple(table)))
}

/// `α ≤_B β`: `B(x, α) ⊆ B(x, β)` for every point `x`.
pub fn radii_leq<B: Ballean>(b: &B, alpha: &B::Radius, beta: &B::Radius) -> bool {
    b.points().into_iter().all(|x| {
        b.ball(x, alpha)
            .into_iter()
            .all(|y| b.contains(x, beta, y))
    })
}

/// `Q(x)`: the union of the balls around `x` over the enumerated radii.
pub fn component<B: Ballean>(b: &B, x: B::Point) -> Vec<B::Point> {
    let mut out = alloc::vec![x];
    for r in b.radii() {
        out.extend(b.ball(x, &r));
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Connected components: the closure of "lies in a common ball", each class
/// ascending and classes ordered by their least point.
pub fn components<B: Ballean>(b: &B) -> Vec<Vec<B::Point>> {
    let points = b.points();
    let radii = b.radii();
    let mut uf = UnionFind::new(points.len());
    for r in &radii {
        for (xi, &x) in points.iter().enumerate() {
            for y in b.ball(x, r) {
                let yi = points
                    .binary_search(&y)
                    .expect("balls stay inside the support");
                uf.union(xi, yi);
            }
        }
    }
    uf.classes()
        .into_iter()
        .map(|class| class.into_iter().map(|i| points[i]).collect())
        .collect()
}

/// First enumerated radius `α` with `set ⊆ B(y, α)` for every `y ∈ set`.
/// The empty set is bounded by any radius.
pub fn bounding_radius<B: Ballean>(b: &B, set: &[B::Point]) -> Option<B::Radius> {
    b.radii().into_iter().find(|r| {
        set.iter()
            .all(|&y| set.iter().all(|&z| b.contains(y, r, z)))
    })
}

pub fn is_bounded<B: Ballean>(b: &B, set: &[B::Point]) -> Verdict {
    if let Some(r) = bounding_radius(b, set) {
        return Verdict::positive(b.scope(), Evidence::of("radius", r.describe()));
    }
    if set.is_empty() {
        // A ballean without radii still bounds the empty set.
        return Verdict::pass(b.scope());
    }
    let escapes = b
        .radii()
        .into_iter()
        .filter_map(|r| {
            set.iter().find_map(|&y| {
                set.iter()
                    .find(|&&z| !b.contains(y, &r, z))
                    .map(|&z| triple(r.describe(), y.describe(), z.describe()))
            })
        })
        .collect();
    Verdict::fail(
        Witness::new(WitnessKind::Unbounded)
            .with("set", set.describe())
            .with("escapes", Datum::Tuple(escapes)),
    )
}

fn largeness_radius<B: Ballean>(b: &B, set: &[B::Point], points: &[B::Point]) -> Option<B::Radius> {
    b.radii()
        .into_iter()
        .find(|r| ball_of_set(b, set, r) == points)
}

/// Large: `B(A, α) = X` for some radius.
pub fn is_large<B: Ballean>(b: &B, set: &[B::Point]) -> Verdict {
    let points = b.points();
    match largeness_radius(b, set, &points) {
        Some(r) => Verdict::positive(b.scope(), Evidence::of("radius", r.describe())),
        None => Verdict::fail(Witness::new(WitnessKind::NotLarge).with("set", set.describe())),
    }
}

/// Thick: every radius has some `x ∈ A` with `B(x, α) ⊆ A`.
pub fn is_thick<B: Ballean>(b: &B, set: &[B::Point]) -> Verdict {
    for r in b.radii() {
        let inside = set.iter().any(|&x| {
            b.ball(x, &r)
                .iter()
                .all(|y| set.binary_search(y).is_ok())
        });
        if !inside {
            return Verdict::fail(
                Witness::new(WitnessKind::NotThick)
                    .with("set", set.describe())
                    .with("radius", r.describe()),
            );
        }
    }
    Verdict::pass(b.scope())
}

/// Small: `X \ B(A, α)` is large for every radius.
pub fn is_small<B: Ballean>(b: &B, set: &[B::Point]) -> Verdict {
    let points = b.points();
    for r in b.radii() {
        let fat = ball_of_set(b, set, &r);
        let rest: Vec<B::Point> = points
            .iter()
            .copied()
            .filter(|p| fat.binary_search(p).is_err())
            .collect();
        if largeness_radius(b, &rest, &points).is_none() {
            return Verdict::fail(
                Witness::new(WitnessKind::NotSmall)
                    .with("set", set.describe())
                    .with("radius", r.describe()),
            );
        }
    }
    Verdict::pass(b.scope())
}

/// Thin: for each radius the points of `A` whose trace ball is not a
/// singleton form a bounded set.
///
/// That set is the least admissible `V`, and boundedness is inherited by
/// subsets, so the check is exact. Each radius's `V` is recorded.
pub fn is_thin<B: Ballean>(b: &B, set: &[B::Point]) -> Verdict {
    let mut table = Vec::new();
    for r in b.radii() {
        let bad: Vec<B::Point> = set
            .iter()
            .copied()
            .filter(|&x| {
                b.ball(x, &r)
                    .iter()
                    .any(|y| *y != x && set.binary_search(y).is_ok())
            })
            .collect();
        if bounding_radius(b, &bad).is_none() {
            return Verdict::fail(
                Witness::new(WitnessKind::NotThin)
                    .with("radius", r.describe())
                    .with("bad", bad.describe()),
            );
        }
        table.push(Datum::pair(r.describe(), bad.describe()));
    }
    Verdict::positive(b.scope(), Evidence::of("v", Datum::Tuple(table)))
}

/// Slowly oscillating for the `{0,1}`-valued function whose ones are `ones`
/// (ascending): per radius, the points where `f` is not constant on the
/// ball form a bounded set.
pub fn is_slowly_oscillating<B: Ballean>(b: &B, ones: &[B::Point]) -> Verdict {
    let f = |p: &B::Point| ones.binary_search(p).is_ok();
    let mut table = Vec::new();
    for r in b.radii() {
        let bad: Vec<B::Point> = b
            .points()
            .into_iter()
            .filter(|x| {
                let fx = f(x);
                b.ball(*x, &r).iter().any(|y| f(y) != fx)
            })
            .collect();
        if bounding_radius(b, &bad).is_none() {
            return Verdict::fail(
                Witness::new(WitnessKind::NotSlowlyOscillating)
                    .with("radius", r.describe())
                    .with("ones", ones.describe())
                    .with("bad", bad.describe()),
            );
        }
        table.push(Datum::pair(r.describe(), bad.describe()));
    }
    Verdict::positive(b.scope(), Evidence::of("v", Datum::Tuple(table)))
}
