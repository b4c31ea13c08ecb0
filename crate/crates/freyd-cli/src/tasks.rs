//! Executes the tasks of a resolved scenario. Each result echoes the
//! operation and its arguments so a report stands on its own.

use freyd::{
    cohomology_vs_r, counit_with, derived_hom, ghost_group, homology, identity_in_counit_image,
    is_ghost, is_nullhomotopic, ladder_check, mapping_cone, prolong_coequalizer, prolong_tensor,
    FPModule,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::wire::{Scenario, Task};

pub fn run_tasks(scenario: &Scenario) -> Result<Vec<Value>, CliError> {
    scenario.tasks.iter().map(|t| run_task(scenario, t)).collect()
}

fn big_to_value(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn cardinality_value(m: &FPModule) -> Value {
    match m.cardinality() {
        Some(c) => big_to_value(&c),
        None => Value::Null,
    }
}

fn invariants_value(m: &FPModule) -> Value {
    serde_json::to_value(m.invariants()).expect("module invariants serialize")
}

fn run_task(s: &Scenario, task: &Task) -> Result<Value, CliError> {
    Ok(match task {
        Task::Homology { complex, degree } => {
            let h = homology(&s.complexes[complex], *degree);
            json!({
                "op": "homology",
                "complex": complex,
                "degree": degree,
                "invariants": invariants_value(&h.module),
            })
        }
        Task::Cohomology { complex, degree } => {
            let h = cohomology_vs_r(&s.complexes[complex], *degree);
            json!({
                "op": "cohomology",
                "complex": complex,
                "degree": degree,
                "invariants": invariants_value(&h.module),
            })
        }
        Task::DerivedHom { source, target, degree } => {
            let h = derived_hom(&s.complexes[source], &s.complexes[target], *degree);
            json!({
                "op": "derived_hom",
                "source": source,
                "target": target,
                "degree": degree,
                "invariants": invariants_value(h.module()),
                "cardinality": cardinality_value(h.module()),
            })
        }
        Task::IsNullhomotopic { map } => {
            let f = &s.maps[map];
            if f.degree_shift != 0 {
                return Err(CliError::Task(format!(
                    "is_nullhomotopic expects a degree-zero map, `{map}` shifts by {}",
                    f.degree_shift
                )));
            }
            json!({
                "op": "is_nullhomotopic",
                "map": map,
                "value": is_nullhomotopic(f),
            })
        }
        Task::IsGhost { map } => {
            let f = &s.maps[map];
            if f.degree_shift != 0 {
                return Err(CliError::Task(format!(
                    "is_ghost expects a degree-zero map, `{map}` shifts by {}",
                    f.degree_shift
                )));
            }
            json!({
                "op": "is_ghost",
                "map": map,
                "value": is_ghost(f),
            })
        }
        Task::GhostGroup { source, target } => {
            let g = ghost_group(&s.complexes[source], &s.complexes[target]);
            json!({
                "op": "ghost_group",
                "source": source,
                "target": target,
                "invariants": invariants_value(&g.module),
                "ghost_order": cardinality_value(&g.module),
                "has_ghost": !g.is_trivial(),
            })
        }
        Task::PfTensor { x, k } => {
            let v = prolong_tensor(&s.complexes[x], &s.complexes[k]);
            json!({
                "op": "pf_tensor",
                "x": x,
                "k": k,
                "invariants": invariants_value(&v.module),
            })
        }
        Task::PfCoequalizer { x, k } => {
            let v = prolong_coequalizer(&s.complexes[x], &s.complexes[k]);
            json!({
                "op": "pf_coequalizer",
                "x": x,
                "k": k,
                "invariants": invariants_value(&v.module),
            })
        }
        Task::Counit { x, k } => {
            let xc = &s.complexes[x];
            let kc = &s.complexes[k];
            let value = prolong_tensor(xc, kc);
            let eps = counit_with(&value, &derived_hom(kc, xc, 0));
            let image = eps.image_module();
            json!({
                "op": "counit",
                "x": x,
                "k": k,
                "counit_iso": eps.is_isomorphism(),
                "value_invariants": invariants_value(&eps.value.module),
                "hom_invariants": invariants_value(eps.hom.module()),
                "image_invariants": invariants_value(&image),
                "image_order": cardinality_value(&image),
            })
        }
        Task::IdentityInCounitImage { complex } => {
            json!({
                "op": "identity_in_counit_image",
                "complex": complex,
                "value": identity_in_counit_image(&s.complexes[complex]),
            })
        }
        Task::LadderCheck { cone_of, x } => {
            let f = &s.maps[cone_of];
            if f.degree_shift != 0 {
                return Err(CliError::Task(format!(
                    "ladder_check cones off a degree-zero map, `{cone_of}` shifts by {}",
                    f.degree_shift
                )));
            }
            let (_, tri) = mapping_cone(f)
                .map_err(|e| CliError::Task(format!("cone of `{cone_of}`: {e}")))?;
            let report = ladder_check(&tri, &s.complexes[x]);
            json!({
                "op": "ladder_check",
                "cone_of": cone_of,
                "x": x,
                "top_exact_at_cone": report.top_exact_at_cone,
                "top_exact_at_middle": report.top_exact_at_middle,
                "bottom_exact_at_cone": report.bottom_exact_at_cone,
                "bottom_exact_at_middle": report.bottom_exact_at_middle,
                "squares_commute": report.squares_commute,
                "top_exact": report.top_exact(),
                "bottom_exact": report.bottom_exact(),
                "fully_exact": report.fully_exact(),
            })
        }
    })
}
