//! Bounded verification of the symmetric monoidal category laws on a sample
//! of objects: pentagon, triangle, hexagon, symmetry, invertibility of the
//! coherence families, functoriality of the tensor, and naturality of
//! α/λ/ρ/γ against every morphism of a bounded hom enumeration.

use crate::report::CheckReport;

use super::{SampleSpec, Smc};

/// Skip any law instance whose participating objects multiply past this; the
/// report counts skipped instances so bounds stay visible.
const WORK_CAP: usize = 4096;
/// Objects at most this large are used when drawing morphisms for
/// naturality/interchange checks.
const MOR_OBJ_CAP: usize = 16;
/// Hard cap on checked instances per law family.
const FAMILY_CAP: usize = 200_000;

struct Ctx<'a, C: Smc> {
    cat: &'a C,
    report: CheckReport,
    checked: usize,
    skipped: usize,
}

impl<'a, C: Smc> Ctx<'a, C> {
    fn assert_eq(&mut self, id: String, anchor: &str, lhs: &C::Morphism, rhs: &C::Morphism) {
        self.checked += 1;
        if !self.cat.equal(lhs, rhs) {
            self.report.fail(
                id,
                anchor,
                format!(
                    "lhs = {}\nrhs = {}",
                    self.cat.render(lhs),
                    self.cat.render(rhs)
                ),
            );
        }
    }

    fn family_done(&mut self, family: &str, anchor: &str) {
        if self.report.entries.iter().all(|e| e.anchor != anchor) {
            let note = if self.skipped > 0 {
                format!(
                    "{family} ({} instances, {} over budget)",
                    self.checked, self.skipped
                )
            } else {
                format!("{family} ({} instances)", self.checked)
            };
            self.report.pass(note, anchor);
        }
        self.checked = 0;
        self.skipped = 0;
    }
}

pub fn check_smc_axioms<C: Smc>(cat: &C, objects: &[C::Object], spec: &SampleSpec) -> CheckReport {
    let mut ctx = Ctx {
        cat,
        report: CheckReport::new(format!("smc-axioms/{}", cat.name())),
        checked: 0,
        skipped: 0,
    };
    let size = |a: &C::Object| cat.approx_size(a);

    // Pentagon.
    for a in objects {
        for b in objects {
            for c in objects {
                for d in objects {
                    if size(a) * size(b) * size(c) * size(d) > WORK_CAP {
                        ctx.skipped += 1;
                        continue;
                    }
                    let bc = cat.tensor_obj(b, c);
                    let lhs = {
                        let s1 = cat.tensor_mor(&cat.associator(a, b, c), &cat.identity(d));
                        let s2 = cat.associator(a, &bc, d);
                        let s3 = cat.tensor_mor(&cat.identity(a), &cat.associator(b, c, d));
                        cat.compose(&cat.compose(&s1, &s2).unwrap(), &s3).unwrap()
                    };
                    let rhs = {
                        let ab = cat.tensor_obj(a, b);
                        let cd = cat.tensor_obj(c, d);
                        cat.compose(&cat.associator(&ab, c, d), &cat.associator(a, b, &cd))
                            .unwrap()
                    };
                    ctx.assert_eq(
                        format!("pentagon/{a:?},{b:?},{c:?},{d:?}"),
                        "smc.pentagon",
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
    ctx.family_done("pentagon", "smc.pentagon");

    // Triangle and unit coherence.
    for a in objects {
        for b in objects {
            if size(a) * size(b) > WORK_CAP {
                ctx.skipped += 1;
                continue;
            }
            let lhs = cat
                .compose(
                    &cat.associator(a, &cat.unit(), b),
                    &cat.tensor_mor(&cat.identity(a), &cat.left_unitor(b)),
                )
                .unwrap();
            let rhs = cat.tensor_mor(&cat.right_unitor(a), &cat.identity(b));
            ctx.assert_eq(format!("triangle/{a:?},{b:?}"), "smc.triangle", &lhs, &rhs);
        }
    }
    ctx.assert_eq(
        "unitors-at-unit".to_string(),
        "smc.triangle",
        &cat.left_unitor(&cat.unit()),
        &cat.right_unitor(&cat.unit()),
    );
    ctx.family_done("triangle", "smc.triangle");

    // Hexagon.
    for a in objects {
        for b in objects {
            for c in objects {
                if size(a) * size(b) * size(c) > WORK_CAP {
                    ctx.skipped += 1;
                    continue;
                }
                let lhs = {
                    let s1 = cat.associator(a, b, c);
                    let s2 = cat.braiding(a, &cat.tensor_obj(b, c));
                    let s3 = cat.associator(b, c, a);
                    cat.compose(&cat.compose(&s1, &s2).unwrap(), &s3).unwrap()
                };
                let rhs = {
                    let s1 = cat.tensor_mor(&cat.braiding(a, b), &cat.identity(c));
                    let s2 = cat.associator(b, a, c);
                    let s3 = cat.tensor_mor(&cat.identity(b), &cat.braiding(a, c));
                    cat.compose(&cat.compose(&s1, &s2).unwrap(), &s3).unwrap()
                };
                ctx.assert_eq(
                    format!("hexagon/{a:?},{b:?},{c:?}"),
                    "smc.hexagon",
                    &lhs,
                    &rhs,
                );
            }
        }
    }
    ctx.family_done("hexagon", "smc.hexagon");

    // Symmetry: γ(a,b) ; γ(b,a) = id.
    for a in objects {
        for b in objects {
            if size(a) * size(b) > WORK_CAP {
                ctx.skipped += 1;
                continue;
            }
            let round = cat
                .compose(&cat.braiding(a, b), &cat.braiding(b, a))
                .unwrap();
            ctx.assert_eq(
                format!("symmetry/{a:?},{b:?}"),
                "smc.symmetry",
                &round,
                &cat.identity(&cat.tensor_obj(a, b)),
            );
        }
    }
    ctx.family_done("symmetry", "smc.symmetry");

    // Invertibility of the coherence families.
    for a in objects {
        for b in objects {
            for c in objects {
                if size(a) * size(b) * size(c) > WORK_CAP {
                    ctx.skipped += 1;
                    continue;
                }
                let fwd = cat.associator(a, b, c);
                let back = cat.associator_inv(a, b, c);
                let src = cat.tensor_obj(&cat.tensor_obj(a, b), c);
                let tgt = cat.tensor_obj(a, &cat.tensor_obj(b, c));
                ctx.assert_eq(
                    format!("associator-inv/{a:?},{b:?},{c:?}"),
                    "smc.inverses",
                    &cat.compose(&fwd, &back).unwrap(),
                    &cat.identity(&src),
                );
                ctx.assert_eq(
                    format!("associator-inv-rev/{a:?},{b:?},{c:?}"),
                    "smc.inverses",
                    &cat.compose(&back, &fwd).unwrap(),
                    &cat.identity(&tgt),
                );
            }
        }
    }
    for a in objects {
        let lu = cat.left_unitor(a);
        let lui = cat.left_unitor_inv(a);
        let ru = cat.right_unitor(a);
        let rui = cat.right_unitor_inv(a);
        ctx.assert_eq(
            format!("left-unitor-inv/{a:?}"),
            "smc.inverses",
            &cat.compose(&lui, &lu).unwrap(),
            &cat.identity(a),
        );
        ctx.assert_eq(
            format!("right-unitor-inv/{a:?}"),
            "smc.inverses",
            &cat.compose(&rui, &ru).unwrap(),
            &cat.identity(a),
        );
    }
    ctx.family_done("inverses", "smc.inverses");

    // The tensor is a functor: identities and interchange.
    for a in objects {
        for b in objects {
            if size(a) * size(b) > WORK_CAP {
                ctx.skipped += 1;
                continue;
            }
            ctx.assert_eq(
                format!("tensor-id/{a:?},{b:?}"),
                "smc.tensor-functor",
                &cat.tensor_mor(&cat.identity(a), &cat.identity(b)),
                &cat.identity(&cat.tensor_obj(a, b)),
            );
        }
    }
    let small: Vec<&C::Object> = objects.iter().filter(|o| size(o) <= MOR_OBJ_CAP).collect();
    // Hom samples between small objects, drawn once.
    let homs: Vec<Vec<Vec<C::Morphism>>> = small
        .iter()
        .map(|a| small.iter().map(|b| cat.hom_sample(a, b, spec)).collect())
        .collect();

    'inter: for (ai, a) in small.iter().enumerate() {
        for (bi, b) in small.iter().enumerate() {
            for (ci, c) in small.iter().enumerate() {
                if homs[ai][bi].is_empty() || homs[bi][ci].is_empty() {
                    continue;
                }
                for (a2i, a2) in small.iter().enumerate() {
                    for (b2i, b2) in small.iter().enumerate() {
                        for (c2i, c2) in small.iter().enumerate() {
                            for f in homs[ai][bi].iter().take(4) {
                                for h in homs[bi][ci].iter().take(4) {
                                    let fh = cat.compose(f, h).unwrap();
                                    for g in homs[a2i][b2i].iter().take(4) {
                                        for k in homs[b2i][c2i].iter().take(4) {
                                            if ctx.checked >= FAMILY_CAP {
                                                break 'inter;
                                            }
                                            let lhs = cat
                                                .compose(
                                                    &cat.tensor_mor(f, g),
                                                    &cat.tensor_mor(h, k),
                                                )
                                                .unwrap();
                                            let rhs =
                                                cat.tensor_mor(&fh, &cat.compose(g, k).unwrap());
                                            ctx.assert_eq(
                                                format!(
                                                    "interchange/{a:?},{b:?},{c:?}/{a2:?},{b2:?},{c2:?}"
                                                ),
                                                "smc.tensor-functor",
                                                &lhs,
                                                &rhs,
                                            );
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    ctx.family_done("tensor-functor", "smc.tensor-functor");

    // Naturality. Unitor squares run against every drawn morphism; braiding
    // and associator squares add context objects, one argument at a time
    // (identities elsewhere); together with interchange this covers the
    // general square over the bounded enumeration.
    const NAT_BRAID_MOR_CAP: usize = 48;
    const NAT_ASSOC_MOR_CAP: usize = 16;
    for (xi, x) in small.iter().enumerate() {
        for (yi, y) in small.iter().enumerate() {
            let fs = &homs[xi][yi];
            for f in fs {
                let lhs = cat
                    .compose(
                        &cat.tensor_mor(&cat.identity(&cat.unit()), f),
                        &cat.left_unitor(y),
                    )
                    .unwrap();
                let rhs = cat.compose(&cat.left_unitor(x), f).unwrap();
                ctx.assert_eq(
                    format!("nat-left-unitor/{x:?},{y:?}/{}", cat.render(f)),
                    "smc.naturality",
                    &lhs,
                    &rhs,
                );
                let lhs = cat
                    .compose(
                        &cat.tensor_mor(f, &cat.identity(&cat.unit())),
                        &cat.right_unitor(y),
                    )
                    .unwrap();
                let rhs = cat.compose(&cat.right_unitor(x), f).unwrap();
                ctx.assert_eq(
                    format!("nat-right-unitor/{x:?},{y:?}/{}", cat.render(f)),
                    "smc.naturality",
                    &lhs,
                    &rhs,
                );
            }
            for f in fs.iter().take(NAT_BRAID_MOR_CAP) {
                for u in &small {
                    if size(x).max(size(y)) * size(u) > WORK_CAP {
                        ctx.skipped += 1;
                        continue;
                    }
                    let lhs = cat
                        .compose(&cat.tensor_mor(f, &cat.identity(u)), &cat.braiding(y, u))
                        .unwrap();
                    let rhs = cat
                        .compose(&cat.braiding(x, u), &cat.tensor_mor(&cat.identity(u), f))
                        .unwrap();
                    ctx.assert_eq(
                        format!("nat-braiding/{x:?},{y:?},{u:?}/{}", cat.render(f)),
                        "smc.naturality",
                        &lhs,
                        &rhs,
                    );
                }
            }
            for f in fs.iter().take(NAT_ASSOC_MOR_CAP) {
                for u in &small {
                    for v in &small {
                        if size(x).max(size(y)) * size(u) * size(v) > WORK_CAP
                            || ctx.checked >= FAMILY_CAP
                        {
                            ctx.skipped += 1;
                            continue;
                        }
                        let id_u = cat.identity(u);
                        let id_v = cat.identity(v);
                        let slots: [(C::Morphism, C::Morphism, C::Morphism); 3] = [
                            (f.clone(), id_u.clone(), id_v.clone()),
                            (id_u.clone(), f.clone(), id_v.clone()),
                            (id_u.clone(), id_v.clone(), f.clone()),
                        ];
                        for (slot, (p, q, r)) in slots.into_iter().enumerate() {
                            let (pd, qd, rd) = (cat.dom(&p), cat.dom(&q), cat.dom(&r));
                            let (pc, qc, rc) = (cat.cod(&p), cat.cod(&q), cat.cod(&r));
                            let lhs = cat
                                .compose(
                                    &cat.tensor_mor(&cat.tensor_mor(&p, &q), &r),
                                    &cat.associator(&pc, &qc, &rc),
                                )
                                .unwrap();
                            let rhs = cat
                                .compose(
                                    &cat.associator(&pd, &qd, &rd),
                                    &cat.tensor_mor(&p, &cat.tensor_mor(&q, &r)),
                                )
                                .unwrap();
                            ctx.assert_eq(
                                format!(
                                    "nat-associator/{x:?},{y:?},{u:?},{v:?}/slot{slot}/{}",
                                    cat.render(f)
                                ),
                                "smc.naturality",
                                &lhs,
                                &rhs,
                            );
                        }
                    }
                }
            }
        }
    }
    ctx.family_done("naturality", "smc.naturality");

    let mut report = ctx.report;
    report.sort();
    report
}
