fn main() {
    std::process::exit(ctl_fragments::cli::run(std::env::args_os()));
}
