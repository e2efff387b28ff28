//! Every example runs to completion.

#[path = "../examples/arc_diagrams.rs"]
mod arc_diagrams;
#[path = "../examples/ds_reduction.rs"]
mod ds_reduction;
#[path = "../examples/ehrig_stroppel.rs"]
mod ehrig_stroppel;
#[path = "../examples/howl_and_tau.rs"]
mod howl_and_tau;
#[path = "../examples/osp_group.rs"]
mod osp_group;
#[path = "../examples/recursion_oracle.rs"]
mod recursion_oracle;
#[path = "../examples/stabilization.rs"]
mod stabilization;
#[path = "../examples/superdimension.rs"]
mod superdimension;
#[path = "../examples/weight_diagrams.rs"]
mod weight_diagrams;

#[test]
fn arc_diagrams_runs() {
    arc_diagrams::run().expect("example succeeds");
}

#[test]
fn ds_reduction_runs() {
    ds_reduction::run().expect("example succeeds");
}

#[test]
fn ehrig_stroppel_runs() {
    ehrig_stroppel::run().expect("example succeeds");
}

#[test]
fn howl_and_tau_runs() {
    howl_and_tau::run().expect("example succeeds");
}

#[test]
fn osp_group_runs() {
    osp_group::run().expect("example succeeds");
}

#[test]
fn recursion_oracle_runs() {
    recursion_oracle::run().expect("example succeeds");
}

#[test]
fn stabilization_runs() {
    stabilization::run().expect("example succeeds");
}

#[test]
fn superdimension_runs() {
    superdimension::run().expect("example succeeds");
}

#[test]
fn weight_diagrams_runs() {
    weight_diagrams::run().expect("example succeeds");
}
