use kjpart::congruence::{builtin_claims, builtin_identities, verify_claims, Hypothesis, SequenceSpec};

#[test]
fn every_theorem_claim_passes_at_its_default_bound() {
    let claims = builtin_claims();
    let reports = verify_claims(&claims, None, true).unwrap();
    assert_eq!(reports.len(), claims.len());
    for (c, r) in claims.iter().zip(&reports) {
        assert_eq!(c.id, r.claim_id);
        assert_eq!(r.bound, c.default_bound);
        assert!(r.checked > 0, "{} checked nothing", c.id);
        if !c.conjecture {
            assert!(r.passed(), "{} fails: {:?}", c.id, &r.counterexamples[..r.counterexamples.len().min(3)]);
        }
    }
}

#[test]
fn parallel_and_sequential_reports_agree() {
    let claims: Vec<_> = builtin_claims().into_iter().filter(|c| c.family == "general-j").collect();
    assert_eq!(verify_claims(&claims, Some(400), true).unwrap(), verify_claims(&claims, Some(400), false).unwrap());
}

#[test]
fn claim_and_identity_ids_are_distinct() {
    let mut ids: Vec<String> = builtin_claims().into_iter().map(|c| c.id).collect();
    ids.extend(builtin_identities().into_iter().map(|e| e.id));
    let n = ids.len();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), n);
}

#[test]
fn kim_claim_uses_the_square_hypothesis() {
    let c = builtin_claims().into_iter().find(|c| c.id == "pbar-mod8-nonsquare").unwrap();
    assert_eq!(c.hypothesis, Hypothesis::NotSquareOrTwiceSquare);
    assert_eq!(c.terms, vec![(1, SequenceSpec::Overpartition)]);
}
