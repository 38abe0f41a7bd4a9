//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any failed.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use palindromic::basis::{
    coords, coords_via_matrix, expand, space_dim, transition_matrix, BasisId, CoordinateVector,
};
use palindromic::families::{
    almkvist, derangement, eulerian, gaussian, partition_poly, scan_almkvist, scan_cell,
};
use palindromic::par::{map_range, Exec};
use palindromic::poly::{construct_from_factors, int, Coefficient, FactorSpec, Polynomial};
use palindromic::positivity::{
    b_product_convolution, gamma_from_real_factorization, gamma_vector, is_integral, is_unimodal,
    lambda_test, verify_gamma_real_rooted,
};

#[derive(Debug)]
struct Fail(String);

impl From<String> for Fail {
    fn from(s: String) -> Self {
        Fail(s)
    }
}

impl From<palindromic::Error> for Fail {
    fn from(e: palindromic::Error) -> Self {
        Fail(e.to_string())
    }
}

impl std::fmt::Display for Fail {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

type Check = Result<String, Fail>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(Fail(format!($($msg)+)));
        }
    };
}

fn rng(criterion: u64, case: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(criterion << 32 | case as u64)
}

/// Runs `cases` independent checks concurrently; reports the first failure.
fn all_cases<F>(cases: usize, f: F) -> Result<(), Fail>
where
    F: Fn(usize) -> Result<(), Fail> + Sync + Send,
{
    map_range(Exec::default(), cases, |i| {
        f(i).map_err(|e| Fail(format!("case {i}: {e}")))
    })
    .into_iter()
    .collect()
}

fn rat(n: i64, d: i64) -> Coefficient {
    Coefficient::new(n.into(), d.into())
}

fn binom_oracle(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, t| acc * (n - t) / (t + 1))
}

/// Palindromic member of `P_n` from its lower-half coefficients.
fn palindrome_from_half(n: usize, half: &[i64]) -> Polynomial {
    expand(&CoordinateVector::from_ints(n, BasisId::S, half).unwrap())
}

fn random_half(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> Vec<i64> {
    let d = space_dim(n);
    let ord = rng.gen_range(0..d);
    let mut half: Vec<i64> = (0..d).map(|_| rng.gen_range(lo..=hi)).collect();
    half[..ord].iter_mut().for_each(|c| *c = 0);
    if half[ord] == 0 {
        half[ord] = if lo < 0 && rng.gen_bool(0.5) { -1 } else { 1 };
    }
    half
}

fn ac1_transition_matrices() -> Check {
    use BasisId::*;
    for n in 0..=60usize {
        ensure!(
            transition_matrix(n, S, A)
                .compose(&transition_matrix(n, A, S))
                .unwrap()
                .is_identity(),
            "M(S,A)M(A,S) != I at n={n}"
        );
        ensure!(
            transition_matrix(n, S, B)
                .compose(&transition_matrix(n, B, S))
                .unwrap()
                .is_identity(),
            "M(S,B)M(B,S) != I at n={n}"
        );
        let bs = transition_matrix(n, B, S);
        let ab = transition_matrix(n, A, B);
        for i in 0..space_dim(n) {
            for j in 0..=i {
                let (ni, nj, ii, jj) = (n as i64, n as i64, i as i64, j as i64);
                // (-1)^{i-j} (n-2j)/(n-i-j) binom(n-i-j, i-j), with 0/0 read as 1.
                let top = ni - 2 * jj;
                let bottom = nj - ii - jj;
                let closed = if bottom == 0 {
                    Coefficient::one()
                } else {
                    Coefficient::new(top.into(), bottom.into())
                        * Coefficient::from_integer(binom_oracle(bottom, ii - jj))
                };
                let closed = if (i - j) % 2 == 1 { -closed } else { closed };
                ensure!(
                    bs.get(i, j) == &closed,
                    "M(B,S)[{i},{j}] at n={n}: {} vs {closed}",
                    bs.get(i, j)
                );
                ensure!(
                    bs.get(i, j).is_integer(),
                    "M(B,S)[{i},{j}] not integral at n={n}"
                );
                ensure!(
                    ab.get(i, j) > &Coefficient::zero(),
                    "d[{i},{j}] <= 0 at n={n}"
                );
            }
        }
    }
    Ok("n = 0..=60".into())
}

fn ac2_iff() -> Check {
    let unimodal_count = std::sync::atomic::AtomicUsize::new(0);
    all_cases(1000, |case| {
        let mut rng = rng(2, case);
        let n = rng.gen_range(0..=40);
        let mut half = random_half(&mut rng, n, 0, 4);
        if rng.gen_bool(0.5) {
            half.sort_unstable();
        }
        let f = palindrome_from_half(n, &half);
        let a_positive = coords(&f, n, BasisId::A)?.is_nonnegative();
        let unimodal = is_unimodal(&f);
        ensure!(
            a_positive == unimodal,
            "A-positive {a_positive} vs unimodal {unimodal} for {f}"
        );
        ensure!(
            lambda_test(&f, n)?.lambda == unimodal,
            "lambda_test disagrees for {f}"
        );
        if unimodal {
            unimodal_count.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
        }
        Ok(())
    })?;
    let u = unimodal_count.into_inner();
    ensure!(
        u > 100 && u < 900,
        "degenerate sample: {u} unimodal of 1000"
    );
    Ok(format!("1000 cases, {u} unimodal"))
}

fn ac3_gamma() -> Check {
    all_cases(1000, |case| {
        let mut rng = rng(3, case);
        let n = rng.gen_range(0..=40);
        let half = random_half(&mut rng, n, -30, 30);
        let f = palindrome_from_half(n, &half);
        let closed = gamma_vector(&f, n)?;
        let peeled = coords(&f, n, BasisId::B)?;
        ensure!(
            closed == peeled,
            "closed {closed} vs peel-off {peeled} for {f}"
        );
        ensure!(is_integral(&closed), "non-integral gamma {closed} for {f}");
        Ok(())
    })?;
    let g = gamma_vector(&"1+4q+q^2".parse().unwrap(), 2)?;
    ensure!(
        g == CoordinateVector::from_ints(2, BasisId::B, &[1, 2])?,
        "gamma(1+4q+q^2) = {g}"
    );
    let g = gamma_vector(&eulerian(4)?, 3)?;
    ensure!(
        g == CoordinateVector::from_ints(3, BasisId::B, &[1, 8])?,
        "gamma(eulerian(4)) = {g}"
    );
    Ok("1000 cases; spot values (1,2), (1,8)".into())
}

fn random_real_spec(rng: &mut ChaCha8Rng) -> FactorSpec {
    let mut spec = FactorSpec::new(rat(rng.gen_range(1..=6), rng.gen_range(1..=3)))
        .with_q_power(rng.gen_range(0..=3))
        .with_one_plus_q(rng.gen_range(0..=5));
    while spec.darga() + 2 <= 30 && rng.gen_bool(0.8) {
        let (p, q) = (rng.gen_range(1..=9), rng.gen_range(1..=9));
        if p == q {
            continue;
        }
        let mult = if spec.darga() + 4 <= 30 {
            rng.gen_range(1..=2)
        } else {
            1
        };
        spec = spec.with_linear(rat(p, q), mult);
    }
    spec
}

fn ac4_real_rooted_transfer() -> Check {
    all_cases(500, |case| {
        let mut rng = rng(4, case);
        let spec = random_real_spec(&mut rng);
        let n = spec.darga();
        ensure!(n <= 30, "darga {n} > 30");
        let f = construct_from_factors(&spec)?;
        let t = verify_gamma_real_rooted(&f, n)?;
        ensure!(t.holds, "transfer fails for {f}: gamma {}", t.gamma);
        let degree = t.gamma_poly.degree().unwrap_or(0);
        ensure!(
            t.gamma_roots.count == degree && t.gamma.is_nonnegative(),
            "gamma poly {} has {} real roots, degree {degree}",
            t.gamma_poly,
            t.gamma_roots.count
        );
        let from_factors = gamma_from_real_factorization(&spec)?;
        ensure!(
            from_factors == t.gamma_poly,
            "factor route {from_factors} vs {}",
            t.gamma_poly
        );
        Ok(())
    })?;
    Ok("500 specs, darga <= 30".into())
}

fn random_lambda(rng: &mut ChaCha8Rng) -> (Polynomial, usize) {
    let n = rng.gen_range(0..=20);
    let mut a: Vec<i64> = (0..space_dim(n)).map(|_| rng.gen_range(0..=4)).collect();
    let k = rng.gen_range(0..a.len());
    a[k] += 1;
    (
        expand(&CoordinateVector::from_ints(n, BasisId::A, &a).unwrap()),
        n,
    )
}

fn ac5_andrews() -> Check {
    all_cases(500, |case| {
        let mut rng = rng(5, case);
        let (f, n) = random_lambda(&mut rng);
        let (g, m) = random_lambda(&mut rng);
        ensure!(
            lambda_test(&f, n)?.lambda && lambda_test(&g, m)?.lambda,
            "inputs not Λ"
        );
        let h = f.multiply(&g);
        ensure!(lambda_test(&h, n + m)?.lambda, "product {h} not Λ");
        let conv = b_product_convolution(&coords(&f, n, BasisId::B)?, &coords(&g, m, BasisId::B)?)?;
        let direct = coords(&h, n + m, BasisId::B)?;
        ensure!(conv == direct, "convolution {conv} vs B-coords {direct}");
        Ok(())
    })?;
    Ok("500 pairs".into())
}

fn ac6_families() -> Check {
    let mut pairs = Vec::new();
    for m in 0..=30 {
        for n in 0..=30 - m {
            pairs.push((m, n));
        }
    }
    all_cases(pairs.len(), |i| {
        let (m, n) = pairs[i];
        ensure!(
            lambda_test(&gaussian(m, n), m * n)?.lambda,
            "gaussian({m},{n}) not Λ"
        );
        Ok(())
    })?;
    all_cases(60, |i| {
        let n = i + 1;
        let f = partition_poly(n);
        ensure!(
            f.degree() == Some(n * (n + 1) / 2),
            "partition_poly({n}) degree"
        );
        ensure!(is_unimodal(&f), "partition_poly({n}) not unimodal");
        Ok(())
    })?;
    for n in 0..=40 {
        ensure!(
            partition_poly(n) == almkvist(n, 2)?,
            "partition_poly({n}) != almkvist({n},2)"
        );
    }
    Ok(format!("{} gaussians, partition n <= 60", pairs.len()))
}

fn ac7_almkvist() -> Check {
    for r in [2, 4, 6] {
        for row in scan_almkvist(1..=20, r..=r)? {
            ensure!(
                row.palindromic && row.lambda,
                "f_{{{},{}}} not Λ",
                row.n,
                row.r
            );
        }
    }
    let row = scan_cell(2, 3)?;
    ensure!(
        !row.unimodal && row.first_violation_index == Some(3),
        "f_{{2,3}} row {row:?}"
    );
    for r in [2, 4, 6] {
        for row in scan_almkvist(100..=101, r..=r)? {
            ensure!(row.lambda, "f_{{{},{r}}} not Λ", row.n);
        }
    }
    Ok("r in {2,4,6}, n = 1..=20 and 100, 101; f_{2,3} dip at 3".into())
}

fn ac8_odd_darga() -> Check {
    let one_plus_q: Polynomial = "1+q".parse().unwrap();
    all_cases(500, |case| {
        let mut rng = rng(8, case);
        let n = 2 * rng.gen_range(0..=20) + 1;
        let half = random_half(&mut rng, n, -9, 9);
        let f = palindrome_from_half(n, &half);
        ensure!(f.evaluate(&int(-1)).is_zero(), "f(-1) != 0 for {f}");
        let h = f.divide_exact(&one_plus_q)?;
        ensure!(
            h.multiply(&one_plus_q) == f,
            "quotient check failed for {f}"
        );
        Ok(())
    })?;
    Ok("500 cases".into())
}

/// Excedance polynomial over derangements of `0..n`, by enumeration.
fn derangement_brute_force(n: usize) -> Polynomial {
    fn walk(perm: &mut Vec<usize>, used: &mut [bool], counts: &mut [i64]) {
        let n = used.len();
        if perm.len() == n {
            counts[(0..n).filter(|&i| perm[i] > i).count()] += 1;
            return;
        }
        let pos = perm.len();
        for v in 0..n {
            if !used[v] && v != pos {
                used[v] = true;
                perm.push(v);
                walk(perm, used, counts);
                perm.pop();
                used[v] = false;
            }
        }
    }
    let mut counts = vec![0i64; n + 1];
    walk(&mut Vec::new(), &mut vec![false; n], &mut counts);
    Polynomial::from_ints(0, &counts)
}

fn ac9_oracles() -> Check {
    for n in 0..=7 {
        let brute = derangement_brute_force(n);
        ensure!(
            derangement(n) == brute,
            "derangement({n}) = {} vs brute {brute}",
            derangement(n)
        );
    }
    all_cases(500, |case| {
        let mut rng = rng(9, case);
        let n = rng.gen_range(0..=40);
        let half = random_half(&mut rng, n, -20, 20);
        let f = palindrome_from_half(n, &half);
        for basis in BasisId::ALL {
            let peeled = coords(&f, n, basis)?;
            let closed = coords_via_matrix(&f, n, basis)?;
            ensure!(
                peeled == closed,
                "{basis}: peel-off {peeled} vs matrix {closed}"
            );
        }
        Ok(())
    })?;
    Ok("derangement n <= 7; 500 coordinate cases".into())
}

const GOLDEN_ANALYZE: &str = "\
polynomial           1+4q+q^2
darga                2
palindromic          true
unimodal             true
log_concave          true
a_positive           true
b_positive           true
b_strictly_positive  true
a_coords             A(1,3)
gamma                B(1,2)
newton_violations    {}
real_root_count      2
real_rooted          true
";

const GOLDEN_MATRIX: &str = "M(S,B) darga 4\n1\n4 1\n6 2 1\n";

const GOLDEN_SCAN: &str = "\
r  n  darga  palindromic  unimodal  lambda  first_violation_index
3  1      2         true      true    true                      -
3  2      6         true     false   false                      3
3  3     12         true      true    true                      -
3  4     20         true     false   false                      9
3  5     30         true      true    true                      -
";

fn ac10_cli_goldens() -> Check {
    let cases: [(&[&str], &str); 3] = [
        (&["analyze", "1+4q+q^2"], GOLDEN_ANALYZE),
        (&["matrix", "4", "S", "B"], GOLDEN_MATRIX),
        (&["scan", "--r", "3", "--n", "1..5"], GOLDEN_SCAN),
    ];
    for (args, golden) in cases {
        let runs: Vec<Vec<u8>> = (0..3)
            .map(|_| {
                let out = Command::new(env!("CARGO_BIN_EXE_palin"))
                    .args(args)
                    .output()
                    .map_err(|e| Fail(e.to_string()))?;
                ensure!(
                    out.status.success(),
                    "{args:?} exited {:?}",
                    out.status.code()
                );
                Ok(out.stdout)
            })
            .collect::<Result<_, Fail>>()?;
        ensure!(
            runs.windows(2).all(|w| w[0] == w[1]),
            "{args:?} output not byte-stable"
        );
        ensure!(
            runs[0] == golden.as_bytes(),
            "{args:?} differs from golden:\n{}",
            String::from_utf8_lossy(&runs[0])
        );
    }
    Ok("3 commands x 3 runs".into())
}

struct Criterion {
    id: &'static str,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Check,
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion {
            id: "AC1",
            name: "transition matrices",
            limit: secs(5),
            run: ac1_transition_matrices,
        },
        Criterion {
            id: "AC2",
            name: "A-positive iff unimodal",
            limit: secs(5),
            run: ac2_iff,
        },
        Criterion {
            id: "AC3",
            name: "gamma closed form vs peel-off",
            limit: secs(5),
            run: ac3_gamma,
        },
        Criterion {
            id: "AC4",
            name: "real-rooted gamma transfer",
            limit: secs(30),
            run: ac4_real_rooted_transfer,
        },
        Criterion {
            id: "AC5",
            name: "Andrews product closure",
            limit: secs(10),
            run: ac5_andrews,
        },
        Criterion {
            id: "AC6",
            name: "gaussian and partition families",
            limit: secs(30),
            run: ac6_families,
        },
        Criterion {
            id: "AC7",
            name: "Almkvist scan",
            limit: None,
            run: ac7_almkvist,
        },
        Criterion {
            id: "AC8",
            name: "odd-darga divisibility by 1+q",
            limit: None,
            run: ac8_odd_darga,
        },
        Criterion {
            id: "AC9",
            name: "oracle equivalences",
            limit: None,
            run: ac9_oracles,
        },
        Criterion {
            id: "AC10",
            name: "CLI goldens byte-stable",
            limit: None,
            run: ac10_cli_goldens,
        },
    ];
    let mut failed = 0;
    for c in criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let over = c.limit.filter(|&l| elapsed > l);
        let limit = c
            .limit
            .map(|l| format!(" < {}s", l.as_secs()))
            .unwrap_or_default();
        match (&outcome, over) {
            (Ok(note), None) => {
                println!(
                    "PASS {:<5} {:<32} {:>8.3}s{limit}  {note}",
                    c.id,
                    c.name,
                    elapsed.as_secs_f64()
                );
            }
            (Ok(_), Some(l)) => {
                failed += 1;
                println!(
                    "FAIL {:<5} {:<32} {:>8.3}s exceeds limit {}s",
                    c.id,
                    c.name,
                    elapsed.as_secs_f64(),
                    l.as_secs()
                );
            }
            (Err(e), _) => {
                failed += 1;
                println!(
                    "FAIL {:<5} {:<32} {:>8.3}s  {e}",
                    c.id,
                    c.name,
                    elapsed.as_secs_f64()
                );
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
