use std::path::PathBuf;

use hopfk::fixtures::{generate, generate_mutations, FILES, MUTATIONS};
use hopfk::format::{FormatError, SpecFile};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

/// Set `HOPFK_REGEN=1` to rewrite the fixture files from their constructors.
#[test]
fn fixture_files_match_their_constructors() {
    let regen = std::env::var_os("HOPFK_REGEN").is_some();
    let mut files = generate();
    let mut files: Vec<(String, String)> = files.drain(..).map(|(n, s)| (n.to_string(), s)).collect();
    files.extend(generate_mutations().into_iter().map(|(n, s)| (format!("mutations/{n}"), s)));
    for (name, contents) in files {
        let path = root().join(&name);
        if regen {
            std::fs::write(&path, &contents).unwrap();
        }
        let on_disk = std::fs::read_to_string(&path).unwrap();
        assert_eq!(SpecFile::parse(&on_disk).unwrap(), SpecFile::parse(&contents).unwrap(), "{name} is stale");
    }
}

#[test]
fn fixtures_round_trip() {
    for (name, src) in FILES.iter().copied().chain(MUTATIONS.iter().map(|&(n, s, _)| (n, s))) {
        let spec = SpecFile::parse(src).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(SpecFile::parse(&spec.to_toml()).unwrap(), spec, "{name}");
    }
}

#[test]
fn fixtures_build() {
    for (name, src) in FILES {
        SpecFile::parse(src).unwrap().validate().unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn mutations_fail_with_the_named_axiom() {
    for (name, src, expect) in MUTATIONS {
        let err = SpecFile::parse(src).unwrap().hopf().map(drop).unwrap_err();
        match err {
            FormatError::Hopf(e) => assert_eq!(e.axiom(), *expect, "{name}"),
            other => panic!("{name}: unexpected {other}"),
        }
    }
}
