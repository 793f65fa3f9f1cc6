#[test]
fn dbg_kernel_b() {
    use qplane::calculus::RewriteTable;
    use qplane::scalar::from_int;
    let t = RewriteTable::variant_b(from_int(2));
    let basis = t.kernel_of_d(2);
    for b in &basis {
        println!("kernel elem: {}  words: {}", b, b.to_word_string());
    }
}

#[test]
fn dbg_metric_c() {
    use qplane::calculus::RewriteTable;
    use qplane::metric::metric_solve;
    use qplane::scalar::from_int;
    let t = RewriteTable::variant_c(from_int(1));
    let sol = metric_solve(&t, 1);
    for (i, m) in sol.basis.iter().enumerate() {
        println!("metric {}: gXX={} gYY={} gXY={} gYX={}", i, m.g_xx, m.g_yy, m.g_xy, m.g_yx);
    }
}
