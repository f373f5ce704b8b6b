//! Thin data-parallel helpers. With the `parallel` feature these run on the
//! ambient rayon pool; without it they degrade to plain sequential loops with
//! identical results.

#[cfg(feature = "parallel")]
pub fn join<A, B, RA, RB>(a: A, b: B) -> (RA, RB)
where
    A: FnOnce() -> RA + Send,
    B: FnOnce() -> RB + Send,
    RA: Send,
    RB: Send,
{
    rayon::join(a, b)
}

#[cfg(not(feature = "parallel"))]
pub fn join<A, B, RA, RB>(a: A, b: B) -> (RA, RB)
where
    A: FnOnce() -> RA + Send,
    B: FnOnce() -> RB + Send,
    RA: Send,
    RB: Send,
{
    (a(), b())
}

/// Order-preserving map.
#[cfg(feature = "parallel")]
pub fn map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Send + Sync,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Send + Sync,
{
    items.into_iter().map(f).collect()
}

/// Maps every index in `0..len` and folds the results with `combine`,
/// starting from `identity()` in each worker.
#[cfg(feature = "parallel")]
pub fn map_reduce<R, F, I, C>(len: usize, identity: I, f: F, combine: C) -> R
where
    R: Send,
    F: Fn(usize, &mut R) + Send + Sync,
    I: Fn() -> R + Send + Sync,
    C: Fn(R, R) -> R + Send + Sync,
{
    use rayon::prelude::*;
    (0..len)
        .into_par_iter()
        .fold(&identity, |mut acc, i| {
            f(i, &mut acc);
            acc
        })
        .reduce(&identity, &combine)
}

#[cfg(not(feature = "parallel"))]
pub fn map_reduce<R, F, I, C>(len: usize, identity: I, f: F, combine: C) -> R
where
    R: Send,
    F: Fn(usize, &mut R) + Send + Sync,
    I: Fn() -> R + Send + Sync,
    C: Fn(R, R) -> R + Send + Sync,
{
    let _ = &combine;
    let mut acc = identity();
    for i in 0..len {
        f(i, &mut acc);
    }
    acc
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
