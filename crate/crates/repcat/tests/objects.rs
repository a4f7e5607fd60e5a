use repcat::samples::*;
use repcat::*;
use exactla::Field;

fn fields() -> Vec<Field> {
    vec![Field::Gf(2), Field::Gf(3), Field::Q]
}

#[test]
fn sample_objects_are_valid() {
    for f in fields() {
        for flavor in Flavor::ALL {
            let mut n = 0;
            for (name, rep) in reps_for(flavor, &f) {
                assert!(rep.check().is_empty(), "{name}");
                for o in objects(flavor, &rep, 8) {
                    assert!(o.check().is_empty(), "{flavor} {name}: {:?}", o.check());
                    n += 1;
                }
            }
            assert!(n >= 20, "{flavor}: {n}");
        }
    }
}

#[test]
fn ex_ev_adjunction() {
    for f in fields() {
        for flavor in Flavor::ALL {
            let mut n = 0;
            for (name, rep) in reps_for(flavor, &f) {
                let objs = objects(flavor, &rep, 6);
                for x in 0..rep.poset().len() {
                    for v in fiber_modules(flavor, &rep, x).iter().take(3) {
                        for m in objs.iter().take(4) {
                            let c = certify_ex_ev(x, v, m).unwrap();
                            assert!(c.holds(), "{flavor} {name} at {x}: {c:?}");
                            n += 1;
                        }
                    }
                }
            }
            assert!(n >= 20);
        }
    }
}

#[test]
fn ev_coe_adjunction() {
    for f in fields() {
        for flavor in Flavor::ALL {
            let mut n = 0;
            for (name, rep) in reps_for(flavor, &f) {
                let objs = objects(flavor, &rep, 6);
                for x in 0..rep.poset().len() {
                    for v in fiber_modules(flavor, &rep, x).iter().take(3) {
                        for m in objs.iter().take(4) {
                            let c = certify_ev_coe(x, m, v).unwrap();
                            assert!(c.holds(), "{flavor} {name} at {x}: {c:?}");
                            n += 1;
                        }
                    }
                }
            }
            assert!(n >= 20);
        }
    }
}
