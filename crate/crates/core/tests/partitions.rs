mod common;

use common::*;
use proptest::prelude::*;
use tcore::counting::partition_count_table;
use tcore::{partitions, Cell, Error, Partition};

#[test]
fn running_example_shape() {
    let lam = p(&[5, 4, 4, 2, 1]);
    assert_eq!(lam.size(), 16);
    assert_eq!(lam.conjugate(), p(&[5, 4, 3, 3, 1]));
    assert_eq!(lam.hook_length(Cell::new(1, 1)).unwrap(), 9);
    assert_eq!(lam.hook_length(Cell::new(2, 1)).unwrap(), 7);
    assert_eq!(lam.content(Cell::new(2, 1)).unwrap(), -1);
    assert_eq!(lam.remove_rim_hook(Cell::new(2, 1)).unwrap(), p(&[5, 3, 1]));
    assert_eq!(p(&[4]).conjugate(), p(&[1, 1, 1, 1]));
    assert_eq!(
        Partition::new(vec![3, 5]).unwrap_err(),
        Error::NotNonincreasing {
            index: 1,
            previous: 3,
            value: 5
        }
    );
}

#[test]
fn enumeration_matches_oracle_and_counts() {
    let p_table = partition_count_table(40);
    for n in 0..=40 {
        let count = partitions(n).count();
        assert_eq!(p_table.get(n).to_string(), count.to_string(), "n = {n}");
    }
    for n in 0..=20 {
        let ours: Vec<Vec<usize>> = partitions(n).map(|l| l.parts().to_vec()).collect();
        assert_eq!(ours, partitions_oracle(n), "reverse-lex order at n = {n}");
    }
}

#[test]
fn hooks_cells_and_conjugates_up_to_30() {
    for n in 0..=30 {
        for lam in partitions(n) {
            assert_eq!(lam.cells().count(), n);
            let hooks = lam.hooks();
            assert_eq!(hooks, naive_hooks(&lam));
            for (c, h) in hooks {
                assert_eq!(
                    lam.arm_length(c).unwrap() + lam.leg_length(c).unwrap() + 1,
                    h
                );
            }
            assert_eq!(sorted_hooks(&lam), sorted_hooks(&lam.conjugate()));
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }
}

#[test]
fn rim_hook_removal_matches_cell_oracle() {
    for n in 0..=16 {
        for lam in partitions(n) {
            for c in lam.cells() {
                let h = lam.hook_length(c).unwrap();
                let removed = lam.remove_rim_hook(c).unwrap();
                assert_eq!(removed.size(), n - h);
                assert_eq!(removed, remove_rim_hook_oracle(&lam, c), "{lam} at {c:?}");
            }
        }
    }
    let two_two = p(&[2, 2]);
    assert_eq!(
        two_two.remove_rim_hook(Cell::new(1, 2)).unwrap(),
        p(&[1, 1])
    );
    assert_eq!(two_two.remove_rim_hook(Cell::new(1, 1)).unwrap(), p(&[1]));
}

#[test]
fn cells_outside_are_rejected() {
    let lam = p(&[3, 1]);
    for c in [
        Cell::new(1, 4),
        Cell::new(2, 2),
        Cell::new(3, 1),
        Cell::new(0, 1),
    ] {
        assert!(lam.hook_length(c).is_err());
        assert!(lam.remove_rim_hook(c).is_err());
    }
}

proptest! {
    #[test]
    fn parse_display_round_trip(lam in arb_partition(10, 20)) {
        let s = lam.to_string();
        prop_assert_eq!(s.parse::<Partition>().unwrap(), lam.clone());
        let spaced: Vec<String> = lam.parts().iter().map(|x| x.to_string()).collect();
        prop_assert_eq!(spaced.join(" ").parse::<Partition>().unwrap(), lam);
    }

    #[test]
    fn conjugation_is_an_involution(lam in arb_partition(15, 15)) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().size(), lam.size());
    }

    #[test]
    fn rim_hooks_shrink_by_hook(lam in arb_partition(8, 12)) {
        for c in lam.cells() {
            let h = lam.hook_length(c).unwrap();
            let r = lam.remove_rim_hook(c).unwrap();
            prop_assert_eq!(r.size() + h, lam.size());
            prop_assert_eq!(rim_hook_cells(&lam, c).len(), h);
        }
    }
}
