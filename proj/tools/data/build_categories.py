"""Writes data/categories.dic, an open word-category lexicon in the
LIWC dictionary layout ('%' header block, then word<TAB>ids)."""
import sys

CATEGORIES = [
    ("pronoun", "i me my mine myself we us our ours ourselves you your yours yourself yourselves he him his himself she her hers herself they them their theirs themselves it its itself this that these those anyone anybody anything someone somebody something everyone everybody everything nobody nothing whatever whoever"),
    ("ppron", "i me my mine myself we us our ours ourselves you your yours yourself yourselves he him his himself she her hers herself they them their theirs themselves i'm i've i'll i'd you're you've you'll you'd we're we've we'll they're they've they'll he's she's"),
    ("i", "i me my mine myself i'm i've i'll i'd"),
    ("we", "we us our ours ourselves we're we've we'll we'd let's"),
    ("you", "you your yours yourself yourselves you're you've you'll you'd ya y'all"),
    ("shehe", "he him his himself she her hers herself he's she's he'd she'd he'll she'll"),
    ("they", "they them their theirs themselves they're they've they'll they'd"),
    ("ipron", "it its itself it's this that these those anyone anybody anything someone somebody something everyone everybody everything nobody nothing whatever whoever another other others"),
    ("family", "family famil* mom mother mothers dad father fathers parent* child children kid kids son sons daughter* brother* sister* wife wives husband* spouse* grandm* grandp* grandchild* aunt* uncle* cousin* relative* baby babies"),
    ("friend", "friend* buddy buddies pal pals neighbor* neighbour* companion* partner* roommate* mate mates"),
    ("affiliation", "friend* family famil* community communit* together team* group* ally allies member* union* marri* wed wedding* couple* partner* relationship* love lov* belong* join* social* bond* loyal* church* neighbor* we us our ours"),
    ("achieve", "achiev* success* succeed* win winning won accomplish* goal* effort* earn* gain* master* improv* best better ability able"),
    ("power", "power* control* authorit* govern* law* legal* court* judge* police* president* congress* senat* state* right* rule* ruling* force* command* boss* leader* dominat* constitution* amendment*"),
    ("drives", "achiev* success* win goal* power* control* authorit* govern* law* right* rule* force* leader* reward* prize* benefit* risk* danger* threat* safe* friend* famil* love together communit* relationship* marri* belong* ally"),
    ("bio", "bod* blood* brain* heart* organ* cell* birth* born pregnan* fetus* fetal embryo* womb* uter* tissue* sex* sexual* gay* lesbian* homosexual* heterosexual* intercourse* health* healthy ill illness* sick* disease* medic* doctor* nurse* hospital* clinic* pain* surg* life alive breath* eat* food* drink* hungry"),
    ("body", "bod* blood* brain* heart* organ* cell* womb* uter* tissue* skin* bone* hand* head* face* arm* leg* eye* hair* breath*"),
    ("health", "health* healthy ill illness* sick* disease* medic* doctor* nurse* hospital* clinic* pain* surg* treatment* therap* pregnan* abort* cure* infect* injur* wound* patient* vaccin* mental*"),
    ("sexual", "sex* sexual* gay* lesbian* homosexual* heterosexual* bisexual* intercourse* orientation* transgender* intimacy intimate* erotic* porn*"),
    ("ingest", "eat* food* drink* hungry meal* dinner* lunch* cook* taste* coffee beer* wine*"),
    ("money", "money* dollar* cash* cost* price* pric* pay* paid* buy* bought* sell* sold* tax* taxes budget* fund* funding econom* financ* wage* salar* income* afford* expens* cheap* profit* market* bank* debt* loan* insur* spend* spent buyback* fee fees"),
    ("work", "work* job* jobs career* employ* boss* office* busines* company* companies industr* labor* labour* profession* task* project* hire* fired"),
    ("death", "death* dead die died dies dying kill* murder* suicid* funeral* grave* corpse* fatal* homicid* massacre* shooting*"),
    ("relig", "god god's bible* church* religio* pray* faith* sin sins sinful holy sacred* christian* jesus heaven* hell* soul* spirit* worship* moral*"),
    ("posemo", "love lov* like good great nice happ* joy* glad* hope* hopeful* kind* care* caring safe* safer safety wonderful* excellent* fair* free freedom* peace* respect* trust* support* benefit* best better agree*"),
    ("negemo", "hate* hated hating bad worse worst wrong* evil* fear* afraid* scare* danger* threat* angry anger* mad sad* hurt* harm* pain* violen* cruel* sick* stupid* ridicul* disgust* deviant* illogic* attack* kill* murder* abuse*"),
    ("anger", "hate* hated hating angry anger* mad furious* rage* attack* fight* hostil* insult* stupid* idiot* violen* destroy* kill* abuse* threat*"),
]

ids = {name: i + 1 for i, (name, _) in enumerate(CATEGORIES)}
words = {}
for name, body in CATEGORIES:
    for w in body.split():
        words.setdefault(w, []).append(ids[name])

with open(sys.argv[1], "w") as out:
    out.write("%\n")
    for name, _ in CATEGORIES:
        out.write(f"{ids[name]}\t{name}\n")
    out.write("%\n")
    for w in sorted(words):
        out.write(w + "\t" + "\t".join(str(i) for i in sorted(set(words[w]))) + "\n")
