//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion report.

use okd::acceptance;

fn run(index: usize, name: &str, f: fn() -> Result<(), String>) {
    let result = f();
    match &result {
        Ok(()) => println!("criterion {index:2} ({name}): PASS"),
        Err(msg) => println!("criterion {index:2} ({name}): FAIL - {msg}"),
    }
    if let Err(msg) = result {
        panic!("criterion {index} ({name}) failed: {msg}");
    }
}

#[test]
fn criterion_01_loop_values() {
    run(1, "loop-values", acceptance::criterion_loop_values);
}

#[test]
fn criterion_02_hom_dimensions() {
    run(2, "hom-dimensions", acceptance::criterion_hom_dimensions);
}

#[test]
fn criterion_03_rescale_equivalence() {
    run(3, "rescale-equivalence", acceptance::criterion_rescale_equivalence);
}

#[test]
fn criterion_04_jones_wenzl() {
    run(4, "jones-wenzl", acceptance::criterion_jones_wenzl);
}

#[test]
fn criterion_05_projector_annihilation() {
    run(
        5,
        "projector-annihilation",
        acceptance::criterion_projector_annihilation,
    );
}

#[test]
fn criterion_06_fusion_oracle() {
    run(6, "fusion-oracle", acceptance::criterion_fusion_oracle);
}

#[test]
fn criterion_07_star_laws() {
    run(7, "star-laws", acceptance::criterion_star_laws);
}

#[test]
fn criterion_08_cstar_positivity() {
    run(8, "cstar-positivity", acceptance::criterion_cstar_positivity);
}

#[test]
fn criterion_09_fiber_functor() {
    run(9, "fiber-functor", acceptance::criterion_fiber_functor);
}

#[test]
fn criterion_10_unitary_fiber() {
    run(10, "unitary-fiber", acceptance::criterion_unitary_fiber);
}

#[test]
fn criterion_11_faithfulness() {
    run(11, "faithfulness", acceptance::criterion_faithfulness);
}

#[test]
fn criterion_12_hopf_presentation() {
    run(12, "hopf-presentation", acceptance::criterion_hopf_presentation);
}
