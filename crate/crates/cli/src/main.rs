fn main() {
    // unlocked handles: workers may print warnings while the command runs
    let code = avgconn::app::run(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
