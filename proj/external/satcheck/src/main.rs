//! Minimal DIMACS CNF front end for the varisat CDCL solver. Prints the
//! standard solution line and exits 10 for SAT, 20 for UNSAT.

use std::fs::File;
use std::io::BufReader;
use std::process::exit;

use varisat::dimacs::DimacsParser;
use varisat::{ExtendFormula, Solver};

fn main() {
    let path = match std::env::args().nth(1) {
        Some(p) => p,
        None => {
            eprintln!("usage: satcheck <file.cnf>");
            exit(1);
        }
    };
    let file = match File::open(&path) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("satcheck: cannot open {path}: {e}");
            exit(1);
        }
    };
    let formula = match DimacsParser::parse(BufReader::new(file)) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("satcheck: parse error: {e}");
            exit(1);
        }
    };
    let mut solver = Solver::new();
    solver.add_formula(&formula);
    match solver.solve() {
        Ok(true) => {
            println!("s SATISFIABLE");
            exit(10);
        }
        Ok(false) => {
            println!("s UNSATISFIABLE");
            exit(20);
        }
        Err(e) => {
            eprintln!("satcheck: solver error: {e}");
            exit(1);
        }
    }
}
