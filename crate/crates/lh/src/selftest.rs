//! The `lh selftest` regression battery: one PASS/FAIL line per identity.

use lhall::exactmath::parse_rat;
use lhall::lhcomb::{genfun_closed, genfun_enum, orthogonality_check, Variant};
use lhall::partitions::{Partition, SkewShape};
use lhall::paths::lgv_check;
use lhall::qjacobi::{
    det_lemma_check, det_prop_check, draw_params, expansion_check, moment_product_check,
    mu_vs_alhc, nu_vs_lhp, selberg_check, SpecParams,
};
use lhall::tableaux::{jacobi_trudi, ls_product, ls_series, JtForm, OrderType};

/// (verify verb, identity checked) pairs for `selftest --list`.
const IDENTITIES: &[(&str, &str)] = &[
    (
        "verify genfun",
        "closed product formula for L/Lbar/AL/ALbar generating functions vs enumeration",
    ),
    (
        "verify jt",
        "Jacobi-Trudi determinants in h and e lecture hall functions vs tableau enumeration",
    ),
    (
        "verify product",
        "closed lecture hall Schur product for straight shapes vs tableau enumeration",
    ),
    (
        "verify expansion",
        "Schur/power-sum expansions through mixed and dual moment determinants",
    ),
    (
        "verify selberg",
        "Selberg-type multivariate moment ratio vs closed product, certified truncation",
    ),
    (
        "(internal) orthogonality",
        "biorthogonality of the h and e lecture hall function families",
    ),
    (
        "(internal) moments",
        "little q-Jacobi mixed/dual moments vs AL/L generating functions",
    ),
    (
        "(internal) detid",
        "rational determinant evaluation lemmas behind the Selberg reduction",
    ),
    (
        "(internal) lgv",
        "non-intersecting path determinants vs tableau enumeration",
    ),
];

pub fn print_identity_table() {
    println!("verb\tidentity");
    for (verb, id) in IDENTITIES {
        println!("{verb}\t{id}");
    }
}

fn report(name: &str, ok: bool) -> bool {
    println!("{} {name}", if ok { "PASS" } else { "FAIL" });
    ok
}

/// Runs the battery; returns true iff every line passed.
pub fn run_all() -> bool {
    let mut ok = true;
    let cap = 10usize;

    for variant in [Variant::L, Variant::LBar, Variant::AL, Variant::ALBar] {
        for n in 1..=4u64 {
            for k in 1..=n {
                let agree = match (genfun_enum(variant, n, k, cap), genfun_closed(variant, n, k, cap)) {
                    (Ok(a), Ok(b)) => a == b,
                    _ => false,
                };
                ok &= report(&format!("genfun {} n={n} k={k}", variant.name()), agree);
            }
        }
    }

    let shapes: &[(&[u64], &[u64])] = &[(&[2, 1], &[]), (&[3, 1], &[1]), (&[2, 2], &[])];
    for &(outer, inner) in shapes {
        let shape = SkewShape::new(
            Partition::new(outer.to_vec()).unwrap(),
            Partition::new(inner.to_vec()).unwrap(),
        )
        .unwrap();
        for otype in [
            OrderType::GeGt,
            OrderType::LtLe,
            OrderType::GtGe,
            OrderType::LeLt,
        ] {
            let agree = (|| {
                let byenum = ls_series(&shape, 3, otype, cap)?;
                let h = jacobi_trudi(&shape, 3, otype, JtForm::H, cap)?;
                let e = jacobi_trudi(&shape, 3, otype, JtForm::E, cap)?;
                Ok::<bool, lhall::error::Error>(byenum == h && byenum == e)
            })()
            .unwrap_or(false);
            ok &= report(
                &format!("jt {:?}/{:?} {}", outer, inner, otype.name()),
                agree,
            );
        }
    }

    for otype in [
        OrderType::GeGt,
        OrderType::LtLe,
        OrderType::GtGe,
        OrderType::LeLt,
    ] {
        let lam = Partition::new(vec![2, 1]).unwrap();
        let agree = (|| {
            let byenum = ls_series(&SkewShape::straight(lam.clone()), 3, otype, cap)?;
            let closed = ls_product(&lam, 3, otype, cap)?;
            Ok::<bool, lhall::error::Error>(byenum == closed)
        })()
        .unwrap_or(false);
        ok &= report(&format!("product 2,1 {}", otype.name()), agree);
    }

    for m in 0..4u64 {
        for n in 0..4u64 {
            ok &= report(
                &format!("orthogonality m={m} n={n}"),
                orthogonality_check(m, n, cap),
            );
        }
    }

    for n in 0..=4u64 {
        for k in 0..=n {
            let agree = mu_vs_alhc(n, k, cap).unwrap_or(false)
                && nu_vs_lhp(n, k, cap).unwrap_or(false);
            ok &= report(&format!("moments n={n} k={k}"), agree);
        }
    }

    let params = SpecParams::from_uv(
        parse_rat("1/3").unwrap(),
        parse_rat("1/5").unwrap(),
        parse_rat("2/7").unwrap(),
    )
    .unwrap();
    let lam = Partition::new(vec![2, 1]).unwrap();
    ok &= report(
        "expansion 2,1 n=3",
        expansion_check(&lam, 3, &params, cap).unwrap_or(false),
    );
    ok &= report(
        "moment products 2,1 n=3",
        moment_product_check(&lam, 3, cap).unwrap_or(false),
    );

    for seed in 1..=5u64 {
        let draw = draw_params(seed, 3);
        let agree =
            det_lemma_check(&draw).unwrap_or(false) && det_prop_check(&draw).unwrap_or(false);
        ok &= report(&format!("detid seed={seed}"), agree);
    }

    ok &= report(
        "selberg 1 n=1",
        selberg_check(&Partition::new(vec![1]).unwrap(), 1, &params, 40)
            .map(|r| r.passes(&parse_rat("1/1000000000000").unwrap()))
            .unwrap_or(false),
    );

    let shape = SkewShape::straight(Partition::new(vec![2, 1]).unwrap());
    ok &= report("lgv 2,1 n=3", lgv_check(&shape, 3, 8).unwrap_or(false));

    ok
}
