use ballean_core::ballean::{
    ball_iary, ball_point_ideal, components, Ballean, IaryBallean, PointIdealBallean, SubBallean,
};
use ballean_core::fault::Fault;
use ballean_core::hyper::{
    cartesian_ball, dsc, exp_ball_iary, exp_ball_point_ideal, DscMethod, Flavor, HyperBallean, HyperRule,
};
use ballean_core::ideal::{all_finite_ideals, Ideal};
use ballean_core::kcube::{omega_embedding_map, FilterCopy};
use ballean_core::maps::{
    complement_map, complement_of_bounded_map, flat_lift, identity_map, principal_filter, principal_members, BalleanMap,
};
use ballean_core::suite::{suite_dsc, suite_kcubes, suite_maps, suite_thin, SuiteReport, Variant};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::model::{parse_set, ModelArgs};
use crate::{
    Command, ComponentBallean, DscFlavor, ElementFlavor, Failure, HyperFlavor, MapName, Method, Output, Prop, SuiteName,
    VariantArg,
};

/// Largest finite ground whose hyperballean components are enumerated.
const MAX_HYPER_COMPONENT_GROUND: u32 = 10;
/// Largest finite ground for maps between hyperballeans.
const MAX_HYPER_MAP_GROUND: u32 = 6;
/// Largest ground for the complement map into `exp(X_I)`.
const MAX_COMPLEMENT_GROUND: u32 = 12;
/// Horizon cap and default for the k-cube maps.
const MAX_OMEGA_HORIZON: u32 = 10;
const DEFAULT_OMEGA_HORIZON: u32 = 8;
const DEFAULT_KCUBE_HORIZON: u32 = 12;
/// Bulk suite limits, per suite.
const MAX_BULK_THIN: u32 = 6;
const MAX_BULK_DSC: u32 = 10;
const MAX_BULK_MAPS: u32 = 5;

fn to_json<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("core types serialize to JSON")
}

pub fn run(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Validate { model, horizon } => {
            let ideal = model.resolve(horizon)?;
            let verdict = ideal.validate();
            Ok(Output {
                positive: verdict.is_positive(),
                value: json!({"model": to_json(&ideal), "verdict": to_json(&verdict)}),
            })
        }
        Command::Ball {
            model,
            horizon,
            flavor,
            center,
            radius,
        } => {
            let ideal = valid(&model, horizon)?;
            let radius = parse_set("--radius", &radius)?;
            let members = match flavor {
                ElementFlavor::PointIdeal => ball_point_ideal(&ideal, center, radius)?,
                ElementFlavor::Iary => ball_iary(&ideal, center, radius)?,
            };
            Ok(Output::data(json!({"members": to_json(&members)})))
        }
        Command::Expball {
            model,
            horizon,
            flavor,
            center,
            radius,
        } => {
            let ideal = valid(&model, horizon)?;
            let center = parse_set("--center", &center)?;
            let radius = parse_set("--radius", &radius)?;
            let members = match flavor {
                HyperFlavor::PointIdeal => exp_ball_point_ideal(&ideal, center, radius)?,
                HyperFlavor::Iary => exp_ball_iary(&ideal, center, radius)?,
                HyperFlavor::Cartesian => cartesian_ball(&ideal, center, radius)?,
            };
            Ok(Output::data(json!({"members": to_json(&members)})))
        }
        Command::Components { model, ballean } => {
            let ideal = finite(&model)?;
            let value = match ballean {
                ComponentBallean::PointIdeal => components_json(&PointIdealBallean::new(&ideal)?),
                ComponentBallean::Iary => components_json(&IaryBallean::new(&ideal)?),
                hyper => {
                    require_ground(&ideal, MAX_HYPER_COMPONENT_GROUND)?;
                    let rule = match hyper {
                        ComponentBallean::ExpPointIdeal => HyperRule::PointIdeal,
                        ComponentBallean::ExpIary => HyperRule::Iary,
                        _ => HyperRule::Cartesian,
                    };
                    components_json(&HyperBallean::new(&ideal, rule)?)
                }
            };
            Ok(Output::data(value))
        }
        Command::Dsc { model, flavor, method } => {
            let ideal = finite(&model)?;
            let flavor = match flavor {
                DscFlavor::PointIdeal => Flavor::PointIdeal,
                DscFlavor::Iary => Flavor::Iary,
                DscFlavor::Cartesian => Flavor::Cartesian,
                DscFlavor::ExpStarPointIdeal => Flavor::ExpStarPointIdeal,
                DscFlavor::ExpStarIary => Flavor::ExpStarIary,
            };
            let method = match method {
                Method::Components => DscMethod::Components,
                Method::Quotient => DscMethod::Quotient,
                Method::Crt => DscMethod::Crt,
            };
            Ok(Output::data(json!({"count": dsc(&ideal, flavor, method)?})))
        }
        Command::Checkmap {
            model,
            map,
            x,
            horizon,
            props,
        } => checkmap(&model, map, x, horizon, &props),
        Command::Suite {
            name,
            model,
            horizon,
            x,
            variant,
            bulk,
            fault,
        } => {
            let fault = match fault {
                None => None,
                Some(name) => Some(Fault::from_name(&name).ok_or_else(|| {
                    let known: Vec<&str> = Fault::ALL.iter().map(|f| f.name()).collect();
                    Failure::input(format!("unknown fault {name:?}; known: {}", known.join(", ")))
                })?),
            };
            let variant = match variant {
                VariantArg::PointIdeal => Variant::PointIdeal,
                VariantArg::Iary => Variant::Iary,
            };
            match bulk {
                Some(max) => bulk_suite(name, max, fault),
                None => single_suite(name, &model, horizon, x, variant, fault),
            }
        }
    }
}

/// Resolves the model and rejects descriptions that are not proper ideals.
fn valid(model: &ModelArgs, horizon: Option<u32>) -> Result<Ideal, Failure> {
    let ideal = model.resolve(horizon)?;
    if let Some(w) = ideal.validate().witness() {
        return Err(Failure {
            kind: "InvalidIdeal".into(),
            message: format!("not a proper ideal: {}", to_json(w)),
        });
    }
    Ok(ideal)
}

fn finite(model: &ModelArgs) -> Result<Ideal, Failure> {
    let ideal = valid(model, None)?;
    if !ideal.ground.is_finite() {
        return Err(ballean_core::error::Error::FiniteGroundRequired.into());
    }
    Ok(ideal)
}

fn require_ground(ideal: &Ideal, max: u32) -> Result<(), Failure> {
    let size = ideal.ground.window_size();
    if size > max {
        return Err(Failure {
            kind: "WindowTooLarge".into(),
            message: format!("this command enumerates P(X); ground size {size} exceeds {max}"),
        });
    }
    Ok(())
}

fn components_json<B: Ballean>(b: &B) -> Value
where
    B::Point: serde::Serialize,
{
    let classes = components(b);
    json!({"count": classes.len(), "components": to_json(&classes)})
}

fn map_props<D, C, F>(m: &BalleanMap<D, C, F>, props: &[Prop]) -> Output
where
    D: Ballean,
    C: Ballean,
    F: Fn(D::Point) -> C::Point,
{
    let mut out = Map::new();
    out.insert("map".into(), Value::from(m.name));
    for prop in props {
        let (label, verdict) = match prop {
            Prop::Coarse => ("coarse", m.is_coarse()),
            Prop::Proper => ("effectivelyProper", m.is_effectively_proper()),
            Prop::Injective => ("injective", m.is_injective()),
            Prop::Surjective => ("surjective", m.is_surjective()),
            Prop::Embedding => ("coarseEmbedding", m.is_coarse_embedding()),
            Prop::Asym => ("asymorphism", m.is_asymorphism()),
            Prop::Equiv => ("coarseEquivalence", m.is_coarse_equivalence()),
        };
        out.insert(label.into(), to_json(&verdict));
    }
    Output::data(Value::Object(out))
}

fn checkmap(model: &ModelArgs, map: MapName, x: u32, horizon: Option<u32>, props: &[Prop]) -> Result<Output, Failure> {
    match map {
        MapName::OmegaEmbedding => {
            let h = omega_horizon(horizon)?;
            return Ok(map_props(&omega_embedding_map(h, None)?, props));
        }
        MapName::FilterCopy => {
            let h = omega_horizon(horizon)?;
            return Ok(map_props(&FilterCopy::new(x, h)?.map()?, props));
        }
        _ => {}
    }
    let ideal = valid(model, horizon)?;
    let xi = PointIdealBallean::new(&ideal)?;
    let xa = IaryBallean::new(&ideal)?;
    match map {
        MapName::Identity => Ok(map_props(&identity_map(&xi, &xa), props)),
        MapName::Complement => {
            require_ground(&ideal, MAX_COMPLEMENT_GROUND)?;
            Ok(map_props(&complement_map(&xi), props))
        }
        _ => {
            require_ground(&ideal, MAX_HYPER_MAP_GROUND)?;
            let exp_point = HyperBallean::new(&ideal, HyperRule::PointIdeal)?;
            let exp_iary = HyperBallean::new(&ideal, HyperRule::Iary)?;
            let window = ideal.ground.window();
            match map {
                MapName::ExpIdentity => Ok(map_props(&identity_map(&exp_point, &exp_iary), props)),
                MapName::CartesianIdentity => {
                    let cartesian = HyperBallean::new(&ideal, HyperRule::Cartesian)?;
                    Ok(map_props(&identity_map(&exp_iary, &cartesian), props))
                }
                MapName::FlatIdentity => {
                    let id = identity_map(&xi, &xa);
                    let flat = flat_lift(&id)?;
                    Ok(map_props(&flat, props))
                }
                MapName::ComplementOfBounded => Ok(map_props(&complement_of_bounded_map(&xi)?, props)),
                MapName::FilterRestriction => {
                    if !window.contains(x) {
                        return Err(ballean_core::error::Error::OutsideSupport { point: x }.into());
                    }
                    let ux = principal_filter(window, x);
                    let m = identity_map(
                        SubBallean::new(&exp_point, ux.clone())?,
                        SubBallean::new(&exp_iary, ux)?,
                    );
                    Ok(map_props(&m, props))
                }
                MapName::IdealRestriction => {
                    let ix = principal_members(&ideal, x)?;
                    if ix.is_empty() {
                        return Err(Failure::input(format!("no member of the ideal contains {x}")));
                    }
                    let m = identity_map(
                        SubBallean::new(&exp_point, ix.clone())?,
                        SubBallean::new(&exp_iary, ix)?,
                    );
                    Ok(map_props(&m, props))
                }
                _ => unreachable!("element and k-cube maps are handled above"),
            }
        }
    }
}

fn omega_horizon(horizon: Option<u32>) -> Result<u32, Failure> {
    let h = horizon.unwrap_or(DEFAULT_OMEGA_HORIZON);
    if h > MAX_OMEGA_HORIZON {
        return Err(ballean_core::error::Error::HorizonSize {
            horizon: h,
            max: MAX_OMEGA_HORIZON,
        }
        .into());
    }
    Ok(h)
}

fn suite_output(report: &SuiteReport) -> Output {
    Output {
        positive: !report.is_mixed(),
        value: to_json(report),
    }
}

fn single_suite(
    name: SuiteName,
    model: &ModelArgs,
    horizon: Option<u32>,
    x: u32,
    variant: Variant,
    fault: Option<Fault>,
) -> Result<Output, Failure> {
    let report = match name {
        SuiteName::Kcubes => suite_kcubes(horizon.unwrap_or(DEFAULT_KCUBE_HORIZON), x, fault)?,
        SuiteName::Thin => suite_thin(&valid(model, horizon)?, variant, fault)?,
        SuiteName::Dsc => suite_dsc(&finite(model)?, fault)?,
        SuiteName::Maps => suite_maps(&finite(model)?, x, fault)?,
    };
    Ok(suite_output(&report))
}

/// Every valid ideal on `1..=max` points; thin runs both variants and maps
/// every `x`. Reports are collected in enumeration order.
fn bulk_suite(name: SuiteName, max: u32, fault: Option<Fault>) -> Result<Output, Failure> {
    let limit = match name {
        SuiteName::Thin => MAX_BULK_THIN,
        SuiteName::Dsc => MAX_BULK_DSC,
        SuiteName::Maps => MAX_BULK_MAPS,
        SuiteName::Kcubes => return Err(Failure::input("--bulk applies to the finite-model suites only")),
    };
    if max == 0 || max > limit {
        return Err(Failure::input(format!("--bulk must lie in 1..={limit} for this suite")));
    }
    let mut jobs: Vec<(Ideal, u32, Variant)> = Vec::new();
    for n in 1..=max {
        for ideal in all_finite_ideals(n)? {
            match name {
                SuiteName::Thin => {
                    jobs.push((ideal.clone(), 0, Variant::PointIdeal));
                    jobs.push((ideal, 0, Variant::Iary));
                }
                SuiteName::Maps => jobs.extend((0..n).map(|x| (ideal.clone(), x, Variant::PointIdeal))),
                _ => jobs.push((ideal, 0, Variant::PointIdeal)),
            }
        }
    }
    let reports: Vec<SuiteReport> = jobs
        .par_iter()
        .map(|(ideal, x, variant)| match name {
            SuiteName::Thin => suite_thin(ideal, *variant, fault),
            SuiteName::Maps => suite_maps(ideal, *x, fault),
            _ => suite_dsc(ideal, fault),
        })
        .collect::<Result<_, _>>()?;
    let mixed: Vec<Value> = reports
        .iter()
        .filter(|r| r.is_mixed())
        .map(|r| json!({"model": to_json(&r.model), "overall": to_json(&r.overall)}))
        .collect();
    let status = if mixed.is_empty() { "holds" } else { "mixedWithWitnesses" };
    Ok(Output {
        positive: mixed.is_empty(),
        value: json!({
            "suite": match name {
                SuiteName::Thin => "thin",
                SuiteName::Dsc => "dsc",
                _ => "maps",
            },
            "bulk": max,
            "fault": fault.map(|f| f.name()),
            "reports": reports.len(),
            "overall": {"status": status},
            "mixed": mixed,
        }),
    })
}
