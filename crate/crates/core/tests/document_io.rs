use coorbit::catalog::{exf_template_instance, heisenberg, ThetaTag};
use coorbit::document::{load, save};
use coorbit::exactalg::{int, rat};
use coorbit::Error;

#[test]
fn round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let algebras = [
        heisenberg(4).unwrap(),
        exf_template_instance(ThetaTag::Rational(rat(-7, 3)), rat(5, 2)).0,
        exf_template_instance(ThetaTag::SymbolicIrrational("sqrt2".into()), int(1)).0,
    ];
    for (k, g) in algebras.iter().enumerate() {
        let path = dir.path().join(format!("g{k}.json"));
        save(g, &path).unwrap();
        let first = std::fs::read(&path).unwrap();
        let back = load(&path).unwrap();
        assert!(back.structurally_eq(g));
        assert_eq!(back.labels(), g.labels());
        save(&back, &path).unwrap();
        assert_eq!(std::fs::read(&path).unwrap(), first);
    }
}

#[test]
fn unwritable_target_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("g.json");
    assert!(matches!(save(&heisenberg(1).unwrap(), &path), Err(Error::Io(_))));
    assert!(matches!(load(&path), Err(Error::Io(_))));
}
