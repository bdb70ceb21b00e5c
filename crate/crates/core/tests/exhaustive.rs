mod common;

use std::collections::{HashMap, HashSet};

use ktpf::{
    build_family_table, config_to_canonical, count_configurations, count_tpfs, enumerate_configurations,
    enumerate_families, enumerate_tpfs, family_members, family_size, park_iterative, park_simultaneous,
    BigCount, ExactTpf, Order,
};

use common::*;

/// Each tuple parks to the unique street whose signature matches its sorted
/// lists, found by searching all arrangements.
#[test]
fn parking_matches_definitional_search() {
    for order in orders_up_to(6) {
        let by_sig = streets_by_signature(&order);
        for a in brute_tpfs(&order) {
            let hits = &by_sig[&sorted_lists(&a)];
            assert_eq!(hits.len(), 1, "{a} is satisfied by {} streets", hits.len());
            assert_eq!(park_simultaneous(&a).unwrap().street(), hits[0].as_slice(), "{a}");
            assert_eq!(park_iterative(&a).unwrap().street(), hits[0].as_slice(), "{a}");
        }
        // every arrangement is reached by some tuple
        assert_eq!(
            BigCount::from(by_sig.len()),
            count_configurations::<BigCount>(&order).unwrap(),
            "{order}"
        );
    }
}

#[test]
fn streams_match_brute_force() {
    for order in Order::all_up_to(7, 4) {
        let brute = brute_tpfs(&order);
        let streamed: Vec<ExactTpf> = enumerate_tpfs(&order).collect();
        assert_eq!(streamed, brute, "{order}");

        let mut canon: Vec<ExactTpf> = brute.iter().map(|a| a.canonicalize().into_inner()).collect();
        canon.sort();
        canon.dedup();
        let fams: Vec<ExactTpf> = enumerate_families(&order).map(|c| c.into_inner()).collect();
        assert_eq!(fams, canon, "{order}");

        let streets: HashSet<_> = enumerate_configurations(&order).collect();
        assert_eq!(streets.len(), fams.len());
    }
}

#[test]
fn counts_match_brute_force() {
    for order in Order::all_up_to(7, 5) {
        let brute = brute_tpfs(&order);
        assert_eq!(count_tpfs::<u64>(&order).unwrap(), brute.len() as u64, "{order}");
        let streets: HashSet<_> = brute.iter().map(|a| park_simultaneous(a).unwrap()).collect();
        assert_eq!(count_configurations::<u64>(&order).unwrap(), streets.len() as u64, "{order}");
    }
}

#[test]
fn family_sizes_match_rearrangement_counts() {
    for order in Order::all_up_to(6, 3) {
        let table = build_family_table(&order, 1 << 20).unwrap();
        for (key, entry) in &table.families {
            let brute: usize = key.pref_lists().iter().map(|l| distinct_rearrangements(l)).product();
            assert_eq!(entry.members, brute as u64, "{key}");
            assert_eq!(family_size::<u64>(key).unwrap(), brute as u64, "{key}");
            assert_eq!(family_members(key).count(), brute, "{key}");
            assert_eq!(park_simultaneous(key).unwrap(), entry.config);
        }
    }
}

#[test]
fn family_table_partitions_the_universe() {
    for order in Order::all_up_to(7, 4) {
        let table = build_family_table(&order, 1 << 22).unwrap();
        assert_eq!(table.total_members(), count_tpfs::<u64>(&order).unwrap());
        assert_eq!(table.len() as u64, count_configurations::<u64>(&order).unwrap());
        let configs: HashSet<_> = table.families.values().map(|e| &e.config).collect();
        assert_eq!(configs.len(), table.len(), "streets repeat across families of {order}");
        for a in enumerate_tpfs(&order).step_by(7) {
            assert!(table.get(&a.canonicalize()).is_some());
        }
    }
}

#[test]
fn members_of_a_family_park_alike() {
    for order in Order::all_up_to(6, 3) {
        for key in enumerate_families(&order) {
            let street = park_simultaneous(&key).unwrap();
            for m in family_members(&key) {
                assert!(m.is_parking_permutation(&key));
                assert_eq!(park_iterative(&m).unwrap(), street);
                assert_eq!(m.generative_multiset().unwrap(), key.generative_multiset().unwrap());
            }
        }
    }
}

#[test]
fn inverse_map_round_trips() {
    for order in orders_up_to(6) {
        for a in enumerate_tpfs(&order) {
            let c = park_simultaneous(&a).unwrap();
            assert_eq!(c.order(), order);
            let back = config_to_canonical(&c);
            assert_eq!(back, a.canonicalize());
            assert_eq!(park_simultaneous(&back).unwrap(), c);
        }
    }
}

#[test]
fn generative_multisets_identify_families() {
    for order in Order::all_up_to(6, 4) {
        let mut seen: HashMap<_, ExactTpf> = HashMap::new();
        for a in enumerate_tpfs(&order) {
            let gm = a.generative_multiset().unwrap();
            let canon = a.canonicalize().into_inner();
            if let Some(prev) = seen.insert(gm, canon.clone()) {
                assert_eq!(prev, canon);
            }
        }
        assert_eq!(seen.len() as u64, count_configurations::<u64>(&order).unwrap());
    }
}
