use periodic_core::{
    gcd_window, maximal_moduli_distinct, multiplicity, odd_cover_check, window_class_check, BigInt,
    BigUint, PositiveInt, ResidueSystem,
};

fn sys(pairs: &[(i64, u64)]) -> ResidueSystem {
    ResidueSystem::from_pairs(pairs).unwrap()
}

#[test]
fn classical_covering_system() {
    // {0(2), 0(3), 1(4), 5(6), 7(12)} covers every integer
    let a = sys(&[(0, 2), (0, 3), (1, 4), (5, 6), (7, 12)]);
    for x in 0..12 {
        assert!(multiplicity(&a, &BigInt::from(x)) >= 1, "x = {x}");
    }
    assert!(maximal_moduli_distinct(&a));
    assert_eq!(
        gcd_window(&a, &BigInt::from(0), &BigInt::from(0)),
        BigUint::from(1u32)
    );
    // at least one integer is covered twice, so not all odd
    assert!(!odd_cover_check(&a, &BigInt::from(0)));
}

#[test]
fn exact_cover_is_odd_cover_from_any_start() {
    let a = sys(&[(0, 2), (1, 4), (3, 8), (7, 8)]);
    for start in -20..20 {
        assert!(odd_cover_check(&a, &BigInt::from(start)));
    }
    let two = PositiveInt::new(2).unwrap();
    let check = window_class_check(&a, two, &BigInt::from(1), &BigInt::from(0));
    assert_eq!(check.window.len(), a.window_len());
    assert!(check.window.iter().all(|&w| w == 1));
}

#[test]
fn parsed_system_matches_constructed() {
    let text = "0 mod 2\n0 mod 3\n1 mod 4\n5 mod 6\n7 mod 12\n";
    let json = "[[0,2],[0,3],[1,4],[5,6],[7,12]]";
    assert_eq!(
        ResidueSystem::parse(text).unwrap(),
        ResidueSystem::parse(json).unwrap()
    );
}
