//! Graph transforms, Brylawski's tensor product formula and the reductions
//! that move between points of one hyperbola.

mod brylawski;
mod curve;
mod transforms;

pub use brylawski::{brylawski_factors, pointed_tensor, BrylawskiFactors, Gadget};
pub use curve::{
    chromatic_evaluator, curve_restriction, eval_curve, evaluate_point, general_evaluator, ising_evaluator, Evaluation,
    PointEvaluator, Route,
};
pub use transforms::{insulated_k_thicken, k_stretch, k_thicken, transform, TransformKind, TransformResult};
