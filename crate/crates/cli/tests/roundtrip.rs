use pivotal::scalar::ratio;
use pivotal::Sort;
use pivotal_cli::expr::{parse, BinOp, Domain, Expr, Func, Literal};
use proptest::prelude::*;

fn leaf(domain: Domain) -> BoxedStrategy<Expr> {
    let lit = match domain {
        Domain::Boolean => any::<bool>().prop_map(|b| Expr::Lit(Literal::Bool(b))).boxed(),
        _ => (0i64..9, 1i64..5).prop_map(|(p, q)| Expr::Lit(Literal::Rat(ratio(p, q)))).boxed(),
    };
    prop_oneof![(0usize..4).prop_map(Expr::Var), lit].boxed()
}

fn tree(domain: Domain) -> impl Strategy<Value = Expr> {
    let ops: Vec<BinOp> = match domain {
        Domain::Boolean => vec![BinOp::And, BinOp::Xor, BinOp::Or],
        _ => vec![BinOp::And, BinOp::Mul, BinOp::Or, BinOp::Add, BinOp::Sub],
    };
    let boolean = domain == Domain::Boolean;
    leaf(domain).prop_recursive(5, 40, 3, move |inner| {
        let ops = ops.clone();
        let mut choices = vec![
            (proptest::sample::select(ops), inner.clone(), inner.clone())
                .prop_map(|(op, a, b)| Expr::Binary(op, Box::new(a), Box::new(b)))
                .boxed(),
            (proptest::sample::select(vec![Func::Min, Func::Max]), proptest::collection::vec(inner.clone(), 2..4))
                .prop_map(|(f, args)| Expr::Call(f, args))
                .boxed(),
            (inner.clone(), inner.clone(), inner.clone())
                .prop_map(|(a, b, c)| Expr::Call(Func::Med, vec![a, b, c]))
                .boxed(),
        ];
        if boolean {
            choices.push(inner.prop_map(|e| Expr::Not(Box::new(e))).boxed());
        }
        proptest::strategy::Union::new(choices)
    })
}

proptest! {
    #[test]
    fn boolean_print_parse(e in tree(Domain::Boolean)) {
        let text = e.display(&Sort::Boolean).to_string();
        prop_assert_eq!(parse(&text, &Domain::Boolean).unwrap(), e, "{}", text);
    }

    #[test]
    fn rational_print_parse(e in tree(Domain::Rational(Sort::Boolean))) {
        let domain = Domain::Rational(Sort::Boolean);
        let text = e.display(&Sort::Boolean).to_string();
        prop_assert_eq!(parse(&text, &domain).unwrap(), e, "{}", text);
    }
}
