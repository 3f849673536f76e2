use fullrank::lines::{constant_det_witness_search, witness_search, SearchStatus, Strategy};
use fullrank::spaces::{enumerate_subspaces, AffineSubspace, LinearSubspace, Shape, DEFAULT_ELEMENT_BUDGET};
use fullrank::verify::{run_campaign, run_flanders, run_square, CampaignSpec, RunOptions, Theorem, Verdict};
use fullrank::{canonical_n, Field, Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn identical_specs_give_identical_reports() {
    let spec = CampaignSpec::new(Theorem::Square, 2, 3, 3).sample(300, 11);
    let a = run_campaign(&spec, &RunOptions::default()).unwrap();
    let b = run_campaign(&spec, &RunOptions::workers(2)).unwrap();
    assert_eq!(a.without_timing().to_json(), b.without_timing().to_json());
    let other = run_campaign(&spec.clone().sample(300, 12), &RunOptions::default()).unwrap();
    assert_ne!(a.case_order_hash, other.case_order_hash);
}

#[test]
fn findings_replay_through_search() {
    let spec = CampaignSpec::new(Theorem::Main, 2, 3, 3).codims(2..=2).ranks(2..=2).allow_out_of_hypothesis(true);
    let report = run_campaign(&spec, &RunOptions::default()).unwrap();
    assert_eq!(report.verdict, Verdict::Findings);
    assert!(report.failures.is_empty());
    for f in &report.findings {
        let s = AffineSubspace::from_text(&f.subspace).unwrap();
        let n = Matrix::from_text(&f.direction).unwrap();
        assert_eq!(s.codim(), 2);
        let out = witness_search(&s, &n, Strategy::Exhaustive, DEFAULT_ELEMENT_BUDGET).unwrap();
        assert_eq!(out.status, SearchStatus::ExhaustedNoWitness);
    }
    let (sharp, _) = fullrank::gallery::sharpness_example(3, 3, Field::gf2()).unwrap();
    assert!(report.findings.iter().any(|f| LinearSubspace::from_text(&f.subspace).unwrap() == sharp));
}

#[test]
fn witnesses_persist_in_superspaces() {
    let f = Field::gf2();
    let shape = Shape::new(f, 4, 2);
    let n = canonical_n(f, 4, 2, 1).unwrap();
    let small = enumerate_subspaces(shape, 2).unwrap();
    let large = enumerate_subspaces(shape, 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let s = small.get(rng.gen_range(0..small.len()));
        assert_eq!(witness_search(&s.to_affine(), &n, Strategy::Exhaustive, 1 << 10).unwrap().status, SearchStatus::WitnessFound);
        let supers: Vec<_> = large.iter().filter(|t| t.contains_subspace(&s).unwrap()).collect();
        assert_eq!(supers.len(), 3);
        for t in supers {
            let out = witness_search(&t.to_affine(), &n, Strategy::Exhaustive, 1 << 10).unwrap();
            assert_eq!(out.status, SearchStatus::WitnessFound);
        }
    }
}

#[test]
fn zero_direction_square_matches_rank_scan() {
    let spec = CampaignSpec::new(Theorem::Square, 2, 3, 3).ranks(0..=0);
    let opts = RunOptions::default();
    let report = run_square(&spec, &opts).unwrap();
    assert_eq!(report.verdict, Verdict::Verified);
    assert_eq!(report.counts.filtered, 0);
    let flanders = run_flanders(&CampaignSpec::new(Theorem::Flanders, 2, 3, 3).ranks(2..=2).codims(1..=1), &opts).unwrap();
    assert_eq!(flanders.counts.passed, 511);
}

#[test]
fn conjugated_retests_agree() {
    let mut spec = CampaignSpec::new(Theorem::Pencil, 2, 3, 3).sample(60, 5);
    spec.random_conjugates = 2;
    let report = run_campaign(&spec, &RunOptions::default()).unwrap();
    assert_eq!(report.verdict, Verdict::Verified);
    let mut spec = CampaignSpec::new(Theorem::Square, 3, 2, 2);
    spec.random_conjugates = 1;
    assert_eq!(run_campaign(&spec, &RunOptions::default()).unwrap().verdict, Verdict::Verified);
}

#[test]
fn constant_witness_on_full_gf2_space() {
    let f = Field::gf2();
    let full = LinearSubspace::full(Shape::new(f, 3, 3)).to_affine();
    let out = constant_det_witness_search(&full, &canonical_n(f, 3, 3, 2).unwrap(), DEFAULT_ELEMENT_BUDGET).unwrap();
    assert_eq!(out.status, SearchStatus::WitnessFound);
}

#[test]
fn constant_det_implies_full_rank_line() {
    let f = Field::gf3();
    let shape = Shape::new(f, 2, 2);
    let n = canonical_n(f, 2, 2, 1).unwrap();
    for s in fullrank::spaces::enumerate_affine(shape, 1).unwrap().iter() {
        let strong = constant_det_witness_search(&s, &n, 100).unwrap();
        if let Some(cert) = strong.certificate {
            assert!(fullrank::lines::line_full_rank(&cert.a, &n).unwrap().is_full_rank());
            assert_eq!(witness_search(&s, &n, Strategy::Exhaustive, 100).unwrap().status, SearchStatus::WitnessFound);
        }
    }
}

#[test]
fn conjecture_mode_reports_without_gating() {
    let spec = CampaignSpec::new(Theorem::Remark2Conjecture, 2, 4, 4).codims(0..=1).sample(40, 0);
    let report = run_campaign(&spec, &RunOptions::default()).unwrap();
    assert!(report.is_consistent());
    assert_eq!(report.counts.failed, 0);
    assert!(matches!(report.verdict, Verdict::Verified | Verdict::Findings));
}
