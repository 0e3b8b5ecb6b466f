use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::detect::contains_target;
use crate::graph::{ClassGraph, Coloring};

use super::{ArrowInstance, CertificateJson};

/// Result of sampling random colorings. Finding nothing proves nothing.
#[derive(Clone, Debug)]
pub struct RandomOutcome {
    pub counterexample: Option<Coloring>,
    pub samples_drawn: u64,
    pub seed: u64,
    pub elapsed: Duration,
}

#[derive(Serialize)]
struct RandomJson<'a> {
    result: &'static str,
    samples_drawn: u64,
    seed: u64,
    elapsed_ms: u128,
    counterexample: Option<CertificateJson<'a>>,
}

impl Serialize for RandomOutcome {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RandomJson {
            result: if self.counterexample.is_some() {
                "counterexample"
            } else {
                "none_found"
            },
            samples_drawn: self.samples_drawn,
            seed: self.seed,
            elapsed_ms: self.elapsed.as_millis(),
            counterexample: self.counterexample.as_ref().map(CertificateJson::from),
        }
        .serialize(s)
    }
}

/// Draws up to `samples` uniformly random total colorings (ChaCha8 seeded
/// with `seed`) and returns the first good one.
pub fn arrows_randomized(instance: &ArrowInstance, samples: u64, seed: u64) -> RandomOutcome {
    let start = Instant::now();
    let host = instance.host();
    let k = instance.color_count();
    let n = host.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assignment = vec![0u8; host.edge_count()];
    let mut classes = vec![ClassGraph::new(n); k];

    for drawn in 1..=samples {
        for c in assignment.iter_mut() {
            *c = rng.random_range(0..k as u8);
        }
        for class in classes.iter_mut() {
            *class = ClassGraph::new(n);
        }
        for (&(u, v), &c) in host.edges().iter().zip(&assignment) {
            classes[c as usize].add_edge(u, v);
        }
        let good = instance
            .targets()
            .iter()
            .zip(&classes)
            .all(|(&t, class)| contains_target(class, t).is_none());
        if good {
            return RandomOutcome {
                counterexample: Some(Coloring::from_assignment(
                    instance.host_arc().clone(),
                    k,
                    assignment,
                )),
                samples_drawn: drawn,
                seed,
                elapsed: start.elapsed(),
            };
        }
    }
    RandomOutcome {
        counterexample: None,
        samples_drawn: samples,
        seed,
        elapsed: start.elapsed(),
    }
}
