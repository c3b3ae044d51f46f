use alloc::vec::Vec;

use super::{Builder, Expectation, NoteExt, SuiteModel, SuiteReport};
use crate::ballean::{Ballean, SubBallean};
use crate::error::Error;
use crate::fault::Fault;
use crate::finset::FinSet;
use crate::kcube::{
    check_copies_close, check_embedding_identity, check_filter_copy_cofinality, check_filter_copy_identity,
    check_filter_partition, check_image_shape, check_parity_lemma, image_shape_gap, omega_embedding_map,
    omega_radius_transport, FilterCopy, OmegaEmbedding,
};
use crate::maps::BalleanMap;
use crate::verdict::{Datum, Evidence, Scope, Verdict};

/// Largest horizon for the set identities on `[0, h)`.
pub const MAX_KCUBE_HORIZON: u32 = 16;
/// Horizon cap for the map-level checks, which sweep every pair of points.
const MAX_MAP_HORIZON: u32 = 10;
/// Window cap for the `U_{≥x}` copies.
const MAX_FILTER_WINDOW: u32 = 10;
const MAX_GAP_HORIZON: u32 = 10;

fn flat_embedding(h: u32, fault: Option<Fault>) -> Result<Verdict, Error> {
    let m = omega_embedding_map(h, fault)?;
    let f = OmegaEmbedding::with_fault(fault);
    let nonempty: Vec<FinSet> = m.domain.points().into_iter().filter(|a| !a.is_empty()).collect();
    let image: Vec<FinSet> = nonempty.iter().map(|&a| f.embed(a)).collect();
    let flat = BalleanMap::new(
        "omegaFlat",
        SubBallean::new(&m.domain, nonempty)?,
        SubBallean::scanning(&m.codomain, image)?,
        move |a| f.embed(a),
    );
    Ok(flat.is_asymorphic_embedding())
}

fn copy_asymorphism(copy: FilterCopy) -> Result<Verdict, Error> {
    let m = copy.map()?;
    let chain = m.domain.radii();
    let transport = m.check_radius_transport(&chain, |k| copy.radius(*k))?;
    Ok(m.is_asymorphism().and(transport))
}

pub fn suite_kcubes(horizon: u32, x: u32, fault: Option<Fault>) -> Result<SuiteReport, Error> {
    if horizon > MAX_KCUBE_HORIZON {
        return Err(Error::HorizonSize { horizon, max: MAX_KCUBE_HORIZON });
    }
    let map_h = horizon.min(MAX_MAP_HORIZON);
    let window = horizon.min(MAX_FILTER_WINDOW);
    let copy = FilterCopy::new(x, window)?;
    let mut out = Builder::new();

    out.push_result(
        "embeddingIdentity",
        "f(exp B_K(A, [0, α])) = exp B_K-ary(f(A), [0, φ(α)]) ∩ S",
        Expectation::Positive,
        check_embedding_identity(horizon, fault),
    );
    out.push_result(
        "parityLemma",
        "for A \\ [0, α] ⊆ Z ⊆ A ∪ [0, α]: Z ≠ A \\ [0, α] iff y_Z ≤ φ(α)",
        Expectation::Positive,
        check_parity_lemma(horizon, fault),
    );
    out.push_result(
        "imageShape",
        "every non-empty f(F) is odd points plus exactly one even point, its minimum",
        Expectation::Positive,
        check_image_shape(horizon, fault),
    );
    let gap_h = horizon.min(MAX_GAP_HORIZON);
    let gap = image_shape_gap(gap_h).map(|(shaped, members)| {
        Verdict::positive(
            Scope::Horizon(gap_h),
            Evidence(alloc::vec![
                ("shaped", Datum::Count(shaped)),
                ("members", Datum::Count(members)),
            ]),
        )
    });
    out.push_result(
        "imageShapeGap",
        "sets of odd points plus one even minimum, against the members of S among them",
        Expectation::Data,
        gap,
    )
    .note("S also needs the even point directly below the least odd point; the shape alone is weaker");

    let check = out.push_result(
        "radiusTransport",
        "f is an asymorphism onto S with ψ([0, β]) = [0, φ(β)]",
        Expectation::Positive,
        omega_radius_transport(map_h, fault),
    );
    if map_h < horizon {
        check.note("map-level check capped at the smaller horizon");
    }
    out.push_result(
        "flatEmbedding",
        "ω_K^♭ asymorphically embeds into ω_K-ary^♭",
        Expectation::Positive,
        flat_embedding(map_h, fault),
    )
    .note("on a window every set is bounded: the flat restriction drops only ∅");

    out.push_result(
        "filterCopyIdentity",
        "f(B_C(X, K)) = exp B_K(f(X), g(K) ∪ {x}) ∩ U_{≥x}",
        Expectation::Positive,
        check_filter_copy_identity(copy),
    );
    out.push_result(
        "filterCopyCofinality",
        "exp B_K(X, K') ∩ U_{≥x} ⊆ exp B_K(X, ψ(g⁻¹(K' ∩ (x, w)))) ∩ U_{≥x}",
        Expectation::Positive,
        check_filter_copy_cofinality(copy),
    )
    .note("checked as an inclusion: the literal equality with ψ(K') fails, since ψ takes radii of the copy");
    let asym = copy_asymorphism(copy);
    let flat_copy = asym.clone();
    out.push_result(
        "filterCopyAsymorphism",
        "U_{≥x} in exp(ω_K) is asymorphic to C(ω, K)",
        Expectation::Positive,
        asym,
    );
    out.push_result(
        "flatFilterCopy",
        "K_{≥x} in ω_K^♭ is asymorphic to K(ω, K)",
        Expectation::Positive,
        flat_copy,
    )
    .note("on a window K_{≥x} = U_{≥x} and K(ω, K) = C(ω, K)");

    let close: Result<Verdict, Error> = (0..window)
        .flat_map(|a| (a + 1..window).map(move |b| (a, b)))
        .try_fold(Verdict::pass(Scope::Horizon(window)), |acc, (a, b)| {
            Ok(acc.and(check_copies_close(a, b, window)?))
        });
    out.push_result(
        "copiesPairwiseClose",
        "U_{≥x} ∈ exp B_K(U_{≥y}, [x, y]) for x < y",
        Expectation::Positive,
        close,
    );
    out.push_result(
        "filterPartition",
        "{U_{≥x}} partitions the non-empty sets",
        Expectation::Positive,
        check_filter_partition(horizon.min(crate::ideal::MAX_FINITE)),
    );

    Ok(out.finish("kcubes", SuiteModel::Omega { horizon, x }, fault, true))
}
