//! `U_q(g)` from Cartan data: relations and Hopf tables, representations,
//! and the measuring checks that connect them to braided quotients.

mod action;
mod cartan;
mod checks;
mod presentation;

pub use action::{GeneratorCoalgebra, MeasuringAction, Representation};
pub use cartan::CartanData;
pub use checks::{
    act_on_quotient, check_antipode, check_derivation_measuring, check_faithful_on_generators,
    check_ideal_preserved, check_measuring, check_preserves_r, check_representation, FaithfulnessReport,
    GeneratorBraidCheck, IdealCheck, IdealReport, MeasuringCounterexample, MeasuringReport, PreservesReport,
    RelationCheck, RepresentationReport,
};
pub use presentation::{Generator, PresentationDoc, TensorTerms, UqPresentation, UqRelation};
