#include "veredit/session.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include "veredit/file_io.hpp"

namespace veredit {

namespace {

StepOutput question_mark() {
    StepOutput out;
    out.text_out.push_back("?");
    out.error = true;
    return out;
}

Line current_line(SessionState& state) {
    // Reads go through the command algebra too; ReadLine never mutates.
    return state.backend->apply(Command(ReadLine{state.current - 1, Line()}));
}

struct Executor {
    SessionState& state;

    StepOutput operator()(const SetAddress& cmd) {
        if (cmd.address > state.backend->line_count())
            return question_mark();
        state.current = cmd.address;
        return {};
    }

    StepOutput operator()(const EnterInsert&) {
        state.mode = ParserMode::Insert;
        state.insert_point = state.current > 0 ? state.current - 1 : 0;
        return {};
    }

    StepOutput operator()(const EnterAppend&) {
        state.mode = ParserMode::Insert;
        state.insert_point = state.current;
        return {};
    }

    StepOutput operator()(const InsertText& cmd) {
        state.backend->apply(Command(InsertLine{state.insert_point, cmd.text}));
        ++state.insert_point;
        state.current = state.insert_point; // 1-based index of the new line
        state.dirty = true;
        return {};
    }

    StepOutput operator()(const EndInsert&) {
        state.mode = ParserMode::Command;
        return {};
    }

    StepOutput operator()(const DeleteCurrent&) {
        if (state.current == 0)
            return question_mark();
        state.backend->apply(Command(DeleteLine{state.current - 1}));
        state.dirty = true;
        const std::size_t count = state.backend->line_count();
        // The next line slides into the deleted slot; clamp at the new end.
        if (state.current > count)
            state.current = count;
        return {};
    }

    StepOutput operator()(const PrintNumbered&) {
        if (state.current == 0)
            return question_mark();
        StepOutput out;
        out.text_out.push_back(std::to_string(state.current) + "\t" +
                               current_line(state).content());
        return out;
    }

    StepOutput operator()(const PrintPlain&) {
        if (state.current == 0)
            return question_mark();
        StepOutput out;
        out.text_out.push_back(current_line(state).content());
        return out;
    }

    StepOutput operator()(const WriteFile& cmd) {
        const std::optional<std::string>& target = cmd.path ? cmd.path : state.filename;
        if (!target)
            return question_mark();
        if (write_file(*target, bytes_from_buffer(state.backend->lines())))
            return question_mark();
        state.dirty = false;
        return {};
    }

    StepOutput operator()(const Quit&) {
        if (state.dirty && !state.quit_warned) {
            state.quit_warned = true;
            return question_mark();
        }
        StepOutput out;
        out.terminate = true;
        return out;
    }

    StepOutput operator()(const Empty&) { return {}; }
};

} // namespace

StepOutput execute(SessionState& state, const ReplCommand& cmd) {
    // Any command other than q withdraws a pending dirty-quit warning.
    if (!std::holds_alternative<Quit>(cmd))
        state.quit_warned = false;
    return std::visit(Executor{state}, cmd);
}

int run_session(SessionState& state, std::istream& in, std::ostream& out,
                std::ostream& diag) {
    std::string input;
    while (true) {
        if (!state.prompt.empty()) {
            out << state.prompt;
            out.flush();
        }
        if (!std::getline(in, input))
            break; // end of input keeps whatever was edited so far
        StepOutput step;
        ParseResult parsed = parse_line(input, state.mode);
        if (std::holds_alternative<ParseError>(parsed)) {
            step.text_out.push_back("?");
            step.error = true;
        } else {
            step = execute(state, std::get<ReplCommand>(parsed));
        }
        for (const std::string& text : step.text_out)
            out << text << '\n';
        if (out.fail()) {
            diag << "veredit: output stream failure\n";
            return 1;
        }
        if (step.terminate)
            return 0;
    }
    if (in.bad()) {
        diag << "veredit: input stream failure\n";
        return 1;
    }
    return 0;
}

SessionState make_session(std::string_view backend_name, Buffer initial) {
    SessionState state;
    state.current = initial.size(); // load leaves the pointer on the last line
    state.backend = make_backend(backend_name, std::move(initial));
    if (!state.backend)
        throw std::invalid_argument("unknown backend: " + std::string(backend_name));
    return state;
}

} // namespace veredit
