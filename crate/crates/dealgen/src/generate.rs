//! Rejection-sampling deal generation.
//!
//! Candidates are drawn uniformly: a full 52-card shuffle cut into four
//! hands (or, when resampling around a fixed South, a 39-card shuffle cut
//! into three). Each candidate index derives its own RNG stream from
//! `(seed, index)`, and accepted deals are emitted in candidate-index
//! order — so output is a pure function of the seed no matter how the
//! candidate loop is scheduled or sharded across workers.

use bridge_core::{Deal, Hand, Seat, Vulnerability};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::constraint::{eval_constraint, ConstraintExpr};
use crate::sample::SampleFile;

/// Default lower bound on the estimated acceptance rate. Constraints this
/// unlikely are treated as effectively unsatisfiable rather than sampled
/// forever.
pub const DEFAULT_FLOOR: f64 = 1e-7;

#[derive(Error, Debug, PartialEq)]
pub enum GenError {
    #[error(
        "estimated acceptance rate fell below {floor:e} \
         ({accepted} accepted in {attempts} attempts)"
    )]
    AcceptanceRateTooLow {
        floor: f64,
        accepted: usize,
        attempts: u64,
    },
}

/// Generated deals plus the number of candidates it took to find them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Generated {
    pub deals: Vec<Deal>,
    pub attempts: u64,
}

/// How each candidate's vulnerability is chosen.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VulPolicy {
    /// Drawn uniformly from the four configurations, before the constraint
    /// is evaluated — vulnerability atoms then filter like any other.
    Uniform,
    Fixed(Vulnerability),
}

/// The deterministic candidate with the given index: a uniform shuffle cut
/// into North, East, South, West, with vulnerability drawn per the policy.
///
/// Exposed so tests (and any parallel driver) can verify that candidates
/// depend only on `(seed, index)`.
pub fn candidate_deal(seed: u64, index: u64, vul_policy: VulPolicy) -> Deal {
    let mut rng = stream_rng(seed, index);
    let mut deck = [0u8; 52];
    for (i, c) in deck.iter_mut().enumerate() {
        *c = i as u8;
    }
    deck.shuffle(&mut rng);
    let mut bits = [0u64; 4];
    for (i, &card) in deck.iter().enumerate() {
        bits[i / 13] |= 1 << card;
    }
    let hands = bits.map(|b| Hand::from_bits(b).unwrap());
    let vul = draw_vul(&mut rng, vul_policy);
    Deal::new(hands, vul).unwrap()
}

/// Generates `count` deals satisfying `constraint`, with the default
/// acceptance-rate floor.
pub fn generate_deals(
    constraint: &ConstraintExpr,
    vul_policy: VulPolicy,
    count: usize,
    seed: u64,
) -> Result<Generated, GenError> {
    generate_deals_with_floor(constraint, vul_policy, count, seed, Some(DEFAULT_FLOOR))
}

/// As [`generate_deals`], with an explicit floor (`None` disables the
/// acceptance-rate check entirely).
///
/// The rate estimate is optimistic — `(accepted + 1) / attempts` — so the
/// check only trips once the evidence is unambiguous: with no acceptances
/// it takes `1 / floor` candidates to fail.
pub fn generate_deals_with_floor(
    constraint: &ConstraintExpr,
    vul_policy: VulPolicy,
    count: usize,
    seed: u64,
    floor: Option<f64>,
) -> Result<Generated, GenError> {
    let mut deals = Vec::with_capacity(count);
    let mut attempts = 0u64;
    for index in 0u64.. {
        if deals.len() == count {
            break;
        }
        let deal = candidate_deal(seed, index, vul_policy);
        attempts += 1;
        if eval_constraint(constraint, &deal) {
            deals.push(deal);
        } else if let Some(floor) = floor {
            if rate_too_low(deals.len(), attempts, floor) {
                return Err(GenError::AcceptanceRateTooLow {
                    floor,
                    accepted: deals.len(),
                    attempts,
                });
            }
        }
    }
    Ok(Generated { deals, attempts })
}

/// Builds a sample file around `template`: board 0 is the template itself,
/// and the rest redistribute the non-South cards uniformly among North,
/// East, and West until `count` boards satisfy `constraint`. South's hand
/// and the vulnerability are the template's throughout.
pub fn resample_fixed_south(
    template: &Deal,
    constraint: &ConstraintExpr,
    count: usize,
    seed: u64,
) -> Result<SampleFile, GenError> {
    resample_fixed_south_with_floor(template, constraint, count, seed, Some(DEFAULT_FLOOR))
}

/// As [`resample_fixed_south`], with an explicit floor.
pub fn resample_fixed_south_with_floor(
    template: &Deal,
    constraint: &ConstraintExpr,
    count: usize,
    seed: u64,
    floor: Option<f64>,
) -> Result<SampleFile, GenError> {
    assert!(count >= 1, "a sample file includes at least the template");
    assert!(
        eval_constraint(constraint, template),
        "the template board must itself satisfy the constraint"
    );
    let south = template.hand(Seat::South);
    let south_bits = south.bits();
    let pool: Vec<u8> = (0u8..52).filter(|&c| south_bits & 1 << c == 0).collect();

    let mut boards = Vec::with_capacity(count);
    boards.push(*template);
    let mut attempts = 0u64;
    for index in 0u64.. {
        if boards.len() == count {
            break;
        }
        let deal = resample_candidate(&pool, south, template.vul, seed, index);
        attempts += 1;
        if eval_constraint(constraint, &deal) {
            boards.push(deal);
        } else if let Some(floor) = floor {
            if rate_too_low(boards.len() - 1, attempts, floor) {
                return Err(GenError::AcceptanceRateTooLow {
                    floor,
                    accepted: boards.len() - 1,
                    attempts,
                });
            }
        }
    }
    Ok(SampleFile {
        south,
        vul: template.vul,
        boards,
    })
}

fn resample_candidate(pool: &[u8], south: Hand, vul: Vulnerability, seed: u64, index: u64) -> Deal {
    let mut rng = stream_rng(seed, index);
    let mut deck = [0u8; 39];
    deck.copy_from_slice(pool);
    deck.shuffle(&mut rng);
    let mut bits = [0u64; 3];
    for (i, &card) in deck.iter().enumerate() {
        bits[i / 13] |= 1 << card;
    }
    let hands = [
        Hand::from_bits(bits[0]).unwrap(),
        Hand::from_bits(bits[1]).unwrap(),
        south,
        Hand::from_bits(bits[2]).unwrap(),
    ];
    Deal::new(hands, vul).unwrap()
}

fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn draw_vul(rng: &mut ChaCha8Rng, policy: VulPolicy) -> Vulnerability {
    match policy {
        VulPolicy::Uniform => Vulnerability::ALL[rng.gen_range(0..4)],
        VulPolicy::Fixed(v) => v,
    }
}

fn rate_too_low(accepted: usize, attempts: u64, floor: f64) -> bool {
    (accepted as f64 + 1.0) / (attempts as f64) < floor
}
