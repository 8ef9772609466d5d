//! Every fuzz seed is a well-formed input for its parser.

use std::path::PathBuf;

use multiwedge::{exact, io};

fn seeds(target: &str) -> Vec<(PathBuf, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let p = e.unwrap().path();
            let text = std::fs::read_to_string(&p).unwrap();
            (p, text)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

macro_rules! seeds_parse {
    ($($target:ident => $parse:path),* $(,)?) => {
        #[test]
        fn all_seeds_parse() {
            $(
                for (path, text) in seeds(stringify!($target)) {
                    if let Err(e) = $parse(&text) {
                        panic!("{}: {e}", path.display());
                    }
                }
            )*
        }
    };
}

seeds_parse! {
    parse_rational => exact::parse_rational,
    parse_wedge => io::parse_wedge,
    parse_wedges => io::parse_wedges,
    parse_family => io::parse_family,
    parse_operator => io::parse_operator,
    parse_rdp_instance => io::parse_rdp_instance,
    parse_rdp_search => io::parse_rdp_search,
    parse_fs_instance => io::parse_fs_instance,
    parse_rk_input => io::parse_rk_input,
    parse_functional_input => io::parse_functional_input,
}
