//! Evaluation of many independent inputs.
//!
//! With the `parallel` feature the work is spread over the rayon pool;
//! without it everything runs on the calling thread. Output order always
//! matches input order.

use thiserror::Error;

use crate::stability::{adiabatic_verdict, AdiabaticReport, StabilityError};
use crate::weierstrass::{analyze, FiberConfig, WeierstrassError, WeierstrassModel};

/// `items.map(f)` on the calling thread.
pub fn map_sequential<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// `items.map(f)` on the rayon pool, results in input order.
#[cfg(feature = "parallel")]
pub fn map_parallel<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

/// Parallel when the feature is on, sequential otherwise.
pub fn map_ordered<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        map_parallel(items, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_sequential(items, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Weierstrass(#[from] WeierstrassError),
    #[error(transparent)]
    Stability(#[from] StabilityError),
}

/// Fiber configuration and adiabatic report of one minimal model.
pub fn evaluate_model(
    model: &WeierstrassModel,
) -> Result<(FiberConfig, AdiabaticReport), PipelineError> {
    let config = analyze(model)?;
    let report = adiabatic_verdict(&config)?;
    Ok((config, report))
}

pub fn evaluate_models(
    models: &[WeierstrassModel],
) -> Vec<Result<(FiberConfig, AdiabaticReport), PipelineError>> {
    map_ordered(models, evaluate_model)
}

pub fn verdicts(configs: &[FiberConfig]) -> Vec<Result<AdiabaticReport, StabilityError>> {
    map_ordered(configs, adiabatic_verdict)
}
