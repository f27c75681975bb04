fn main() {
    std::process::exit(blocklab::cli::dispatch(std::env::args_os()));
}
