use std::io::{stderr, stdout};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let code = blinv::run(&args, &mut stdout(), &mut stderr());
    std::process::exit(i32::from(code));
}
