use equicurve_cli::{Entry, Report, Status};
use proptest::prelude::*;

fn status() -> impl Strategy<Value = Status> {
    prop_oneof![Just(Status::Pass), Just(Status::Fail), Just(Status::Inconclusive)]
}

fn entry() -> impl Strategy<Value = Entry> {
    ("[a-z][a-z0-9-]{0,12}", status(), prop::collection::vec("[ -~]{0,40}", 0..4), any::<u32>()).prop_map(
        |(id, s, detail, ms)| {
            let mut e = Entry::new(&id, s, detail);
            e.wall_ms = ms as u64;
            e
        },
    )
}

fn report() -> impl Strategy<Value = Report> {
    let config = prop::collection::vec(("[a-z_]{1,12}", "[ -~]{0,12}"), 0..4);
    (config, prop::collection::vec(entry(), 0..6)).prop_map(|(config, entries)| {
        let mut seen = std::collections::HashSet::new();
        let entries = entries.into_iter().filter(|e| seen.insert(e.id.clone())).collect();
        Report { config, entries }
    })
}

proptest! {
    #[test]
    fn text_and_json_round_trip(r in report()) {
        // an empty detail line cannot be told apart from a missing one
        prop_assume!(r.entries.iter().all(|e| e.detail.iter().all(|d| !d.is_empty())));
        prop_assert_eq!(Report::parse(&r.render()).unwrap(), r.clone());
        let json = serde_json::to_string(&r).unwrap();
        prop_assert_eq!(serde_json::from_str::<Report>(&json).unwrap(), r);
    }

    #[test]
    fn exit_code_matches_worst_status(r in report()) {
        let worst = r.entries.iter().map(|e| e.status).fold(Status::Pass, Status::combine);
        let want = match worst { Status::Pass => 0, Status::Fail => 1, Status::Inconclusive => 3 };
        prop_assert_eq!(r.exit_code(), want);
    }
}
