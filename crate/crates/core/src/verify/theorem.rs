use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::canon::canonical_key;
use crate::enumerate::{enumerate_class, Limits};
use crate::error::VerifyError;
use crate::family::{MutationType, TypeKind};
use crate::recognize::{all_matches, classify};

use super::report::{Failure, VerificationReport};
use super::sample::random_member;
use super::seeds::dynkin_seed;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremOptions {
    pub limits: Limits,
    /// Random recognizer-positive diagrams to test against the class.
    pub samples: usize,
    pub rng_seed: u64,
}

impl Default for TheoremOptions {
    fn default() -> Self {
        TheoremOptions {
            limits: Limits::default(),
            samples: 100,
            rng_seed: 0x5eed,
        }
    }
}

/// Checks both directions of the classification for one seed.
///
/// Every class member must classify to the seed's type and belong to exactly
/// one family. Every random diagram the recognizers put in that type must lie
/// in the class.
pub fn run_theorem_check(kind: TypeKind, rank: usize, opts: TheoremOptions) -> Result<VerificationReport, VerifyError> {
    let seed = dynkin_seed(kind, rank)?;
    let class = enumerate_class(&seed, opts.limits)?;
    if !class.exhausted {
        return Err(VerifyError::LimitExceeded);
    }
    let expected = MutationType::new(kind, rank);
    let mut report = VerificationReport::new(format!("theorem/{kind}({rank})"));
    report.diagrams = class.len();
    let checked: Vec<(Option<String>, Option<Failure>)> = class
        .members
        .par_iter()
        .map(|(_, d)| {
            let got = classify(d).mutation_type;
            let fams: Vec<String> = all_matches(d).iter().map(|m| m.family.to_string()).collect();
            let failure = if got != expected {
                Some(format!("classified as {got}"))
            } else if fams.len() != 1 {
                Some(format!("matches {} families", fams.len()))
            } else {
                None
            };
            let census = (fams.len() == 1).then(|| fams[0].clone());
            let failure = failure.map(|detail| Failure {
                diagram: d.into(),
                vertex: None,
                expected: vec![expected.to_string()],
                observed: fams.join(" + "),
                detail,
            });
            (census, failure)
        })
        .collect();
    for (census, failure) in checked {
        if let Some(f) = census {
            *report.census.entry(f).or_default() += 1;
        }
        report.failures.extend(failure);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.rng_seed ^ (rank as u64) << 8 ^ kind as u64);
    let n = seed.vertex_count();
    for _ in 0..opts.samples {
        let Some(d) = random_member(kind, n, 5_000, &mut rng) else {
            break;
        };
        report.samples += 1;
        let key = canonical_key(&d).map_err(crate::error::EnumError::from)?;
        if !class.contains(&key) {
            report.failures.push(Failure {
                diagram: (&d).into(),
                vertex: None,
                expected: vec![expected.to_string()],
                observed: "outside the class".into(),
                detail: "recognizer-positive diagram is not mutation equivalent to the seed".into(),
            });
        }
    }
    if report.samples < opts.samples {
        report.failures.push(Failure {
            diagram: (&seed).into(),
            vertex: None,
            expected: vec![format!("{} samples", opts.samples)],
            observed: format!("{} samples", report.samples),
            detail: "could not draw enough recognizer-positive diagrams".into(),
        });
    }
    Ok(report)
}
