fn main() {
    std::process::exit(falqon_mgi::cli::run(std::env::args_os()));
}
