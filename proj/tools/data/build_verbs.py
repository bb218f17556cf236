"""Writes data/verbs.txt: auxiliaries, contractions and every inflection
(lemminflect) of a hand-picked list of common verb lemmas.

usage: build_verbs.py OUTPUT
"""
import sys
from lemminflect import getAllInflections, getAllInflectionsOOV
BASE = """
accept accuse achieve acknowledge act add address admit adopt advise affect afford agree aim allow alter announce answer appear apply appreciate approach approve argue arise arrange arrest arrive ask assert assess assign assist assume attach attack attempt attend attract avoid await
ban base battle bear beat become beg begin behave believe belong bend bet bind bite blame bleed blow borrow bother break breathe bring build burn buy
calculate call campaign cancel care carry catch cause celebrate challenge change charge chase check choose claim clarify clean clear climb close collect combine come comment commit compare compete complain complete concern conclude condemn confirm confuse connect consider consist contain continue contribute control convert convince cook cope correct cost count cover create criticize cross cry cut
damage dance deal debate decide declare decline defeat defend define delay deliver demand deny depend describe deserve design desire destroy determine develop die differ disagree disallow disappear discover discuss dismiss display dispute distinguish divide doubt drag draw dream dress drink drive drop
earn eat educate elect eliminate embrace emerge emphasize employ enable encourage end endanger enforce engage enjoy ensure enter establish estimate evaluate examine exceed exist expand expect experience explain explore express extend
face fail fall fear feed feel fight fill find finish fire fit fix flee fly focus fold follow forbid force forget forgive form found free fund
gain gather generate get give go govern grab grant grow guarantee guess
handle hang happen harm hate have head hear help hide hire hit hold hope hunt hurt
identify ignore illustrate imagine impact implement imply impose improve include increase indicate infringe inform inherit injure insist install intend interfere interpret introduce invest investigate invite involve issue
join judge jump justify
keep kick kill kiss know
label lack land last laugh launch lay lead learn leave legalize legislate lend let lie lift like limit link listen live load lock look lose love
maintain make manage mark marry matter mean measure meet mention mind miss mistake mix modify monitor move murder
name need negotiate note notice
obey object observe obtain occur offend offer open operate oppose order outlaw owe own
pass pay perform permit persuade pick place plan play point possess post pour practice pray predict prefer prepare present preserve press pretend prevent print proceed produce prohibit promise promote propose protect protest prove provide publish pull punish purchase pursue push put
qualify question quit quote
raise reach react read realize recall receive recognize recommend record recover reduce refer reflect refuse regard regret regulate reject relate release rely remain remember remind remove repeal repeat replace reply report represent require rescue research resemble reserve resist resolve respect respond rest restore restrict result retain retire return reveal review ride ring rise risk rob rule run
sacrifice satisfy save say scare search secure see seek seem select sell send sentence separate serve settle shake shape share shoot shout show shut sign sing sink sit sleep slip smell smile solve sound speak spend split spoil stand start state stay steal step stick stop store struggle study submit succeed suffer suggest suit supply support suppose surprise surrender survive suspect sustain swear switch
take talk target teach tear tell tend terminate test thank think threaten throw tolerate touch track trade train transfer travel treat trust try turn
undergo understand undermine unite urge use
value vary view violate visit vote
wait wake walk want warn wash waste watch wear win wish witness wonder work worry write
abort adopt ban carry conceive outlaw register regulate shoot
"""
AUX = """am is are was were be been being have has had having do does did doing done
can could will would shall should may might must ought
ain't aren't can't couldn't didn't doesn't don't hadn't hasn't haven't isn't mightn't mustn't shan't shouldn't wasn't weren't won't wouldn't
i'm you're we're they're it's he's she's that's what's there's here's who's
i've you've we've they've i'll you'll we'll they'll he'll she'll it'll i'd you'd we'd they'd he'd she'd
"""
forms = set(AUX.split())
for lemma in set(BASE.split()):
    forms.add(lemma)
    infl = getAllInflections(lemma, upos='VERB') or getAllInflectionsOOV(lemma, upos='VERB')
    for tag, vals in infl.items():
        for v in vals:
            if v.isalpha():
                forms.add(v.lower())
print(len(set(BASE.split())), len(forms), file=sys.stderr)
open(sys.argv[1], 'w').write('\n'.join(sorted(forms)) + '\n')
